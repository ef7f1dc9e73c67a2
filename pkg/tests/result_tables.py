"""Published shared-task result rows, used as reference data by the tests."""

# (precision %, recall %, F) rows of the published result tables, in order:
# development and test sets for parts 1, 2 and 3; the last row of each block
# is the whole-sentence baseline.
RESULT_TABLES = {
    "development part 1": [(95.77, 92.08, 93.89), (94.84, 87.33, 90.93), (92.94, 86.87, 89.80),
                           (90.11, 88.80, 89.45), (94.08, 84.59, 89.08), (96.32, 38.08, 54.58)],
    "test part 1": [(93.96, 89.59, 91.72), (92.91, 85.08, 88.82), (89.54, 86.01, 87.74),
                    (93.76, 81.90, 87.43), (89.79, 84.88, 87.27), (98.44, 36.58, 53.34)],
    "development part 2": [(91.27, 89.00, 90.12), (83.80, 80.44, 82.09), (80.12, 83.03, 81.55),
                           (78.65, 78.97, 78.81), (99.28, 51.73, 68.02), (96.32, 51.86, 67.42)],
    "test part 2": [(90.04, 88.41, 89.22), (84.72, 79.96, 82.28), (80.11, 83.47, 81.76),
                    (79.57, 77.68, 78.61), (99.28, 48.90, 65.47), (98.44, 48.90, 65.34)],
    "development part 3": [(87.18, 82.48, 84.77), (78.19, 67.63, 72.53), (70.98, 72.31, 71.64),
                           (76.54, 67.20, 71.57), (73.93, 62.44, 67.70), (59.85, 55.56, 57.62),
                           (96.32, 35.77, 52.17)],
    "test part 3": [(84.82, 73.28, 78.63), (70.89, 65.57, 68.12), (76.91, 60.61, 67.79),
                    (73.75, 60.00, 66.17), (72.56, 54.55, 62.77), (55.81, 45.99, 50.42),
                    (98.44, 31.48, 47.71)],
}
