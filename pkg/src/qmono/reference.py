"""Published reference values for the bundled comparison tables.

Keys are (measure, class) or (measure, n_qubits). Criticalities recorded as
None stand for "beyond the search window" in the source table. These values
were obtained from 10^6-sample ensembles; small-sample runs deviate, most
visibly in the extreme statistics alpha_p (biased high) and alpha_c (biased
low).
"""

from .measures import Measure

GHZ = "haar"
W = "w-class"

# measure -> class -> (alpha_p, alpha_c)
CRITICALITY = {
    Measure.NEGATIVITY: {GHZ: (0.1467, 1.6735), W: (0.0991, 1.9885)},
    Measure.LOG_NEGATIVITY: {GHZ: (0.1497, 1.8540), W: (0.0991, 2.0)},
    Measure.CONCURRENCE: {GHZ: (0.1470, 2.0), W: (2.0, 2.0)},
    Measure.EOF: {GHZ: (0.0866, 1.3520), W: (1.0410, 1.4280)},
    Measure.DISCORD_LEFT: {GHZ: (0.1163, 3.4317), W: (0.8382, 9.3492)},
    Measure.DISCORD_RIGHT: {GHZ: (0.0968, 1.3520), W: (0.9797, 1.3608)},
    Measure.WORK_DEFICIT_LEFT: {GHZ: (0.1183, None), W: (0.9630, None)},
    Measure.WORK_DEFICIT_RIGHT: {GHZ: (0.0989, None), W: (0.9799, None)},
}

# measure -> class -> area under the f curve
AREA_SCORE = {
    Measure.NEGATIVITY: {GHZ: 0.7245, W: 0.9441},
    Measure.LOG_NEGATIVITY: {GHZ: 0.8765, W: 1.0957},
    Measure.CONCURRENCE: {GHZ: 0.9498, W: 2.0000},
    Measure.EOF: {GHZ: 0.6182, W: 1.2751},
    Measure.DISCORD_LEFT: {GHZ: 0.6669, W: 1.4870},
    Measure.DISCORD_RIGHT: {GHZ: 0.6472, W: 1.2333},
}

# measure -> class -> (mean, variance, skewness) of the alpha = 1 score, N = 3
MOMENTS_LINEAR = {
    Measure.NEGATIVITY: {GHZ: (0.18542, 0.022174, 0.62577),
                         W: (0.025438, 0.0069282, 0.38597)},
    Measure.LOG_NEGATIVITY: {GHZ: (0.094092, 0.026725, 0.59757),
                             W: (-0.023887, 0.01132, 0.15495)},
    Measure.CONCURRENCE: {GHZ: (0.068952, 0.037962, 0.48944),
                          W: (-0.19631, 0.0089384, -0.076814)},
    Measure.EOF: {GHZ: (0.25496, 0.036393, 0.50209),
                  W: (-0.062687, 0.0022365, -0.66105)},
    Measure.DISCORD_RIGHT: {GHZ: (0.25496, 0.036393, 0.50209),
                            W: (-0.062687, 0.0022365, -0.66105)},
    Measure.WORK_DEFICIT_RIGHT: {GHZ: (0.079392, 0.051408, 0.64816),
                                 W: (-0.085636, 0.0033781, -0.9464)},
}

# measure -> class -> (mean, variance, skewness) of the alpha = 2 score, N = 3
MOMENTS_SQUARED = {
    Measure.NEGATIVITY: {GHZ: (0.413269, 0.027109, 0.19832),
                         W: (0.14462, 0.015031, 0.90635)},
    Measure.LOG_NEGATIVITY: {GHZ: (0.37581, 0.023849, 0.40478),
                             W: (0.13071, 0.010451, 0.76232)},
    Measure.CONCURRENCE: {GHZ: (0.33335, 0.034293, 0.50371),
                          W: (0.0, None, None)},
    Measure.EOF: {GHZ: (0.3985, 0.040395, 0.32512),
                  W: (0.060853, 0.0036504, 1.1312)},
    Measure.DISCORD_RIGHT: {GHZ: (0.42308, 0.040715, 0.23827),
                            W: (0.074828, 0.0043115, 0.84245)},
    Measure.WORK_DEFICIT_RIGHT: {GHZ: (0.31472, 0.043941, 0.46134),
                                 W: (0.058729, 0.003126, 0.70358)},
}

# measure -> N -> (mean, variance, skewness) of the alpha = 2 score, Haar states
SCALING_STATS = {
    Measure.CONCURRENCE: {3: (0.33335, 0.034293, 0.50371),
                          6: (0.95732, 0.0013211, -1.4482)},
    Measure.NEGATIVITY: {3: (0.41329, 0.027109, 0.19832),
                         6: (0.95373, 0.0013209, -1.4483)},
    Measure.EOF: {3: (0.3985, 0.040395, 0.32512),
                  6: (0.93432, 0.00259, -1.3846)},
    Measure.LOG_NEGATIVITY: {3: (0.37581, 0.023849, 0.040478),
                             6: (0.96605, 0.00073, -1.5107)},
    Measure.DISCORD_RIGHT: {3: (0.42308, 0.040715, 0.23827),
                            6: (0.92927, 0.0025693, -1.3762)},
}

# measure -> N -> mean of the alpha = 2 score, Haar states
SCALING_MEANS = {
    Measure.CONCURRENCE: {3: 0.33335, 4: 0.72941, 5: 0.90175, 6: 0.95732},
    Measure.NEGATIVITY: {3: 0.41329, 4: 0.75322, 5: 0.90303, 6: 0.95373},
    Measure.EOF: {3: 0.3985, 4: 0.73239, 5: 0.87166, 6: 0.93432},
    Measure.LOG_NEGATIVITY: {3: 0.37581, 4: 0.75106, 5: 0.92158, 6: 0.96605},
    Measure.DISCORD_RIGHT: {3: 0.42308, 4: 0.70413, 5: 0.85582, 6: 0.92927},
}

TABLE_IDS = (1, 2, 3, 4, 5, 6)
