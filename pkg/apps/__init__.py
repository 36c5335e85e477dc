# Apps module