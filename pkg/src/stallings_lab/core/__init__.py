"""Free group words, Stallings graphs and subgroup algebra."""
