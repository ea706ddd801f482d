# Models package 