"""Integer stiffness tables used as fixtures.

Scaled Bezier stiffness matrices split as ``M_A + nu * M_B``:
2D uses ``360 (1 - nu^2) K0`` with plane stress, 3D uses
``5400 (1 + nu)(1 - 2 nu) K0`` with shear modulus ``E / (1 + nu)``
(``shear_scale=2``).  Only rows confirmed by the quadrature
oracle are kept, keyed by 1-based row number within each 9x9 (2D) or
27x27 (3D) block.
"""

TABLES_2D = {
    "A11": {
        1: [144, -24, -40, 24, -36, -28, -8, -20, -12],
        2: [-24, 128, -24, -36, 32, -36, -20, 0, -20],
        3: [-40, -24, 144, -28, -36, 24, -12, -20, -8],
        4: [24, -36, -28, 112, -8, -24, 24, -36, -28],
        5: [-36, 32, -36, -8, 96, -8, -36, 32, -36],
        6: [-28, -36, 24, -24, -8, 112, -28, -36, 24],
        7: [-8, -20, -12, 24, -36, -28, 144, -24, -40],
        9: [-12, -20, -8, -28, -36, 24, -40, -24, 144],
    },
    "A12": {
        1: [45, -30, -15, 30, -20, -10, 15, -10, -5],
        2: [30, 0, -30, 20, 0, -20, 10, 0, -10],
        3: [15, 30, -45, 10, 20, -30, 5, 10, -15],
        4: [-30, 20, 10, 0, 0, 0, 30, -20, -10],
        5: [-20, 0, 20, 0, 0, 0, 20, 0, -20],
        6: [-10, -20, 30, 0, 0, 0, 10, 20, -30],
        7: [-15, 10, 5, -30, 20, 10, -45, 30, 15],
        8: [-10, 0, 10, -20, 0, 20, -30, 0, 30],
        9: [-5, -10, 15, -10, -20, 30, -15, -30, 45],
    },
    "B11": {
        1: [-48, -24, -8, 24, 12, 4, 24, 12, 4],
        2: [-24, -32, -24, 12, 16, 12, 12, 16, 12],
        3: [-8, -24, -48, 4, 12, 24, 4, 12, 24],
        4: [24, 12, 4, -48, -24, -8, 24, 12, 4],
        5: [12, 16, 12, -24, -32, -24, 12, 16, 12],
        6: [4, 12, 24, -8, -24, -48, 4, 12, 24],
        7: [24, 12, 4, 24, 12, 4, -48, -24, -8],
        8: [12, 16, 12, 12, 16, 12, -24, -32, -24],
        9: [4, 12, 24, 4, 12, 24, -8, -24, -48],
    },
    "B12": {
        1: [45, 90, 45, -90, -20, -10, -45, -10, -5],
        2: [-90, 0, 90, 20, 0, -20, 10, 0, -10],
        3: [-45, -90, -45, 10, 20, 90, 5, 10, 45],
        4: [90, 20, 10, 0, 0, 0, -90, -20, -10],
        6: [-10, -20, -90, 0, 0, 0, 10, 20, 90],
        7: [45, 10, 5, 90, 20, 10, -45, -90, -45],
        8: [-10, 0, 10, -20, 0, 20, 90, 0, -90],
        9: [-5, -10, -45, -10, -20, -90, 45, 90, 45],
    },
}

TABLES_3D = {
    "A11": {
        1: [864, 144, -48, 144, -72, -72, -48, -72, -40, 144, -72, -72, -72, -108, -60, -72, -60, -28, -48, -72, -40, -72, -60, -28, -40, -28, -12],
        2: [144, 672, 144, -72, 144, -72, -72, -16, -72, -72, 144, -72, -108, -24, -108, -60, -40, -60, -72, -16, -72, -60, -40, -60, -28, -24, -28],
        3: [-48, 144, 864, -72, -72, 144, -40, -72, -48, -72, -72, 144, -60, -108, -72, -28, -60, -72, -40, -72, -48, -28, -60, -72, -12, -28, -40],
        6: [-72, -72, 144, -16, 144, 672, -72, -72, 144, -60, -108, -72, -40, -24, 144, -60, -108, -72, -28, -60, -72, -24, -40, -16, -28, -60, -72],
        7: [-48, -72, -40, 144, -72, -72, 864, 144, -48, -72, -60, -28, -72, -108, -60, 144, -72, -72, -40, -28, -12, -72, -60, -28, -48, -72, -40],
        8: [-72, -16, -72, -72, 144, -72, 144, 672, 144, -60, -40, -60, -108, -24, -108, -72, 144, -72, -28, -24, -28, -60, -40, -60, -72, -16, -72],
        9: [-40, -72, -48, -72, -72, 144, -48, 144, 864, -28, -60, -72, -60, -108, -72, -72, -72, 144, -12, -28, -40, -28, -60, -72, -40, -72, -48],
        11: [-72, 144, -72, -108, -24, -108, -60, -40, -60, 144, 512, 144, -24, 128, -24, -40, 0, -40, -72, 144, -72, -108, -24, -108, -60, -40, -60],
        12: [-72, -72, 144, -60, -108, -72, -28, -60, -72, -16, 144, 672, -40, -24, 144, -24, -40, -16, -72, -72, 144, -60, -108, -72, -28, -60, -72],
        13: [-72, -108, -60, 144, -24, -40, -72, -108, -60, 144, -24, -40, 512, 128, 0, 144, -24, -40, -72, -108, -60, 144, -24, -40, -72, -108, -60],
        15: [-60, -108, -72, -40, -24, 144, -60, -108, -72, -40, -24, 144, 0, 128, 512, -40, -24, 144, -60, -108, -72, -40, -24, 144, -60, -108, -72],
        16: [-72, -60, -28, -72, -108, -60, 144, -72, -72, -16, -40, -24, 144, -24, -40, 672, 144, -16, -72, -60, -28, -72, -108, -60, 144, -72, -72],
        17: [-60, -40, -60, -108, -24, -108, -72, 144, -72, -40, 0, -40, -24, 128, -24, 144, 512, 144, -60, -40, -60, -108, -24, -108, -72, 144, -72],
        18: [-28, -60, -72, -60, -108, -72, -72, -72, 144, -24, -40, -16, -40, -24, 144, -16, 144, 672, -28, -60, -72, -60, -108, -72, -72, -72, 144],
        20: [-72, -16, -72, -60, -40, -60, -28, -24, -28, -72, 144, -72, -108, -24, -108, -60, -40, -60, 144, 672, 144, -72, 144, -72, -72, -16, -72],
        21: [-40, -72, -48, -28, -60, -72, -12, -28, -40, -72, -72, 144, -60, -108, -72, -28, -60, -72, -48, 144, 864, -72, -72, 144, -40, -72, -48],
        22: [-72, -60, -28, -16, -40, -24, -72, -60, -28, -72, -108, -60, 144, -24, -40, -72, -108, -60, 144, -72, -72, 672, 144, -16, 144, -72, -72],
        23: [-60, -40, -60, -40, 0, -40, -60, -40, -60, -108, -24, -108, -24, 128, -24, -108, -24, -108, -72, 144, -72, 144, 512, 144, -72, 144, -72],
        24: [-28, -60, -72, -24, -40, -16, -28, -60, -72, -60, -108, -72, -40, -24, 144, -60, -108, -72, -72, -72, 144, -16, 144, 672, -72, -72, 144],
        25: [-40, -28, -12, -72, -60, -28, -48, -72, -40, -72, -60, -28, -72, -108, -60, 144, -72, -72, -48, -72, -40, 144, -72, -72, 864, 144, -48],
        26: [-28, -24, -28, -60, -40, -60, -72, -16, -72, -60, -40, -60, -108, -24, -108, -72, 144, -72, -72, -16, -72, -72, 144, -72, 144, 672, 144],
        27: [-12, -28, -40, -28, -60, -72, -40, -72, -48, -28, -60, -72, -60, -108, -72, -72, -72, 144, -40, -72, -48, -72, -72, 144, -48, 144, 864],
    },
    "A12": {
        1: [270, -180, -90, 180, -120, -60, 90, -60, -30, 135, -90, -45, 90, -60, -30, 45, -30, -15, 45, -30, -15, 30, -20, -10, 15, -10, -5],
        2: [180, 0, -180, 120, 0, -120, 60, 0, -60, 90, 0, -90, 60, 0, -60, 30, 0, -30, 30, 0, -30, 20, 0, -20, 10, 0, -10],
        3: [90, 180, -270, 60, 120, -180, 30, 60, -90, 45, 90, -135, 30, 60, -90, 15, 30, -45, 15, 30, -45, 10, 20, -30, 5, 10, -15],
        7: [-90, 60, 30, -180, 120, 60, -270, 180, 90, -45, 30, 15, -90, 60, 30, -135, 90, 45, -15, 10, 5, -30, 20, 10, -45, 30, 15],
        8: [-60, 0, 60, -120, 0, 120, -180, 0, 180, -30, 0, 30, -60, 0, 60, -90, 0, 90, -10, 0, 10, -20, 0, 20, -30, 0, 30],
        9: [-30, -60, 90, -60, -120, 180, -90, -180, 270, -15, -30, 45, -30, -60, 90, -45, -90, 135, -5, -10, 15, -10, -20, 30, -15, -30, 45],
        10: [135, -90, -45, 90, -60, -30, 45, -30, -15, 180, -120, -60, 120, -80, -40, 60, -40, -20, 135, -90, -45, 90, -60, -30, 45, -30, -15],
        11: [90, 0, -90, 60, 0, -60, 30, 0, -30, 120, 0, -120, 80, 0, -80, 40, 0, -40, 90, 0, -90, 60, 0, -60, 30, 0, -30],
        12: [45, 90, -135, 30, 60, -90, 15, 30, -45, 60, 120, -180, 40, 80, -120, 20, 40, -60, 45, 90, -135, 30, 60, -90, 15, 30, -45],
        16: [-45, 30, 15, -90, 60, 30, -135, 90, 45, -60, 40, 20, -120, 80, 40, -180, 120, 60, -45, 30, 15, -90, 60, 30, -135, 90, 45],
        17: [-30, 0, 30, -60, 0, 60, -90, 0, 90, -40, 0, 40, -80, 0, 80, -120, 0, 120, -30, 0, 30, -60, 0, 60, -90, 0, 90],
        18: [-15, -30, 45, -30, -60, 90, -45, -90, 135, -20, -40, 60, -40, -80, 120, -60, -120, 180, -15, -30, 45, -30, -60, 90, -45, -90, 135],
        19: [45, -30, -15, 30, -20, -10, 15, -10, -5, 135, -90, -45, 90, -60, -30, 45, -30, -15, 270, -180, -90, 180, -120, -60, 90, -60, -30],
        20: [30, 0, -30, 20, 0, -20, 10, 0, -10, 90, 0, -90, 60, 0, -60, 30, 0, -30, 180, 0, -180, 120, 0, -120, 60, 0, -60],
        21: [15, 30, -45, 10, 20, -30, 5, 10, -15, 45, 90, -135, 30, 60, -90, 15, 30, -45, 90, 180, -270, 60, 120, -180, 30, 60, -90],
        25: [-15, 10, 5, -30, 20, 10, -45, 30, 15, -45, 30, 15, -90, 60, 30, -135, 90, 45, -90, 60, 30, -180, 120, 60, -270, 180, 90],
        26: [-10, 0, 10, -20, 0, 20, -30, 0, 30, -30, 0, 30, -60, 0, 60, -90, 0, 90, -60, 0, 60, -120, 0, 120, -180, 0, 180],
        27: [-5, -10, 15, -10, -20, 30, -15, -30, 45, -15, -30, 45, -30, -60, 90, -45, -90, 135, -30, -60, 90, -60, -120, 180, -90, -180, 270],
    },
    "B11": {
        2: [-432, -1056, -432, 72, -144, 72, 120, 80, 120, 72, -144, 72, 180, 120, 180, 108, 104, 108, 120, 80, 120, 108, 104, 108, 52, 56, 52],
        3: [-48, -432, -1440, 72, 72, -144, 56, 120, 144, 72, 72, -144, 84, 180, 216, 44, 108, 168, 56, 120, 144, 44, 108, 168, 20, 52, 88],
        4: [-144, 72, 72, -1152, -384, -64, -144, 72, 72, 216, 180, 84, -192, 0, 32, 216, 180, 84, 168, 108, 44, 64, 64, 32, 168, 108, 44],
        5: [72, -144, 72, -384, -832, -384, 72, -144, 72, 180, 120, 180, 0, -160, 0, 180, 120, 180, 108, 104, 108, 64, 32, 64, 108, 104, 108],
        6: [72, 72, -144, -64, -384, -1152, 72, 72, -144, 84, 180, 216, 32, 0, -192, 84, 180, 216, 44, 108, 168, 32, 64, 64, 44, 108, 168],
        7: [144, 120, 56, -144, 72, 72, -1440, -432, -48, 168, 108, 44, 216, 180, 84, -144, 72, 72, 88, 52, 20, 168, 108, 44, 144, 120, 56],
        8: [120, 80, 120, 72, -144, 72, -432, -1056, -432, 108, 104, 108, 180, 120, 180, 72, -144, 72, 52, 56, 52, 108, 104, 108, 120, 80, 120],
        9: [56, 120, 144, 72, 72, -144, -48, -432, -1440, 44, 108, 168, 84, 180, 216, 72, 72, -144, 20, 52, 88, 44, 108, 168, 56, 120, 144],
        10: [-144, 72, 72, 216, 180, 84, 168, 108, 44, -1152, -384, -64, -192, 0, 32, 64, 64, 32, -144, 72, 72, 216, 180, 84, 168, 108, 44],
        11: [72, -144, 72, 180, 120, 180, 108, 104, 108, -384, -832, -384, 0, -160, 0, 64, 32, 64, 72, -144, 72, 180, 120, 180, 108, 104, 108],
        12: [72, 72, -144, 84, 180, 216, 44, 108, 168, -64, -384, -1152, 32, 0, -192, 32, 64, 64, 72, 72, -144, 84, 180, 216, 44, 108, 168],
        13: [216, 180, 84, -192, 0, 32, 216, 180, 84, -192, 0, 32, -896, -320, -64, -192, 0, 32, 216, 180, 84, -192, 0, 32, 216, 180, 84],
        14: [180, 120, 180, 0, -160, 0, 180, 120, 180, 0, -160, 0, -320, -640, -320, 0, -160, 0, 180, 120, 180, 0, -160, 0, 180, 120, 180],
        15: [84, 180, 216, 32, 0, -192, 84, 180, 216, 32, 0, -192, -64, -320, -896, 32, 0, -192, 84, 180, 216, 32, 0, -192, 84, 180, 216],
        16: [168, 108, 44, 216, 180, 84, -144, 72, 72, 64, 64, 32, -192, 0, 32, -1152, -384, -64, 168, 108, 44, 216, 180, 84, -144, 72, 72],
        17: [108, 104, 108, 180, 120, 180, 72, -144, 72, 64, 32, 64, 0, -160, 0, -384, -832, -384, 108, 104, 108, 180, 120, 180, 72, -144, 72],
        18: [44, 108, 168, 84, 180, 216, 72, 72, -144, 32, 64, 64, 32, 0, -192, -64, -384, -1152, 44, 108, 168, 84, 180, 216, 72, 72, -144],
        19: [144, 120, 56, 168, 108, 44, 88, 52, 20, -144, 72, 72, 216, 180, 84, 168, 108, 44, -1440, -432, -48, -144, 72, 72, 144, 120, 56],
        20: [120, 80, 120, 108, 104, 108, 52, 56, 52, 72, -144, 72, 180, 120, 180, 108, 104, 108, -432, -1056, -432, 72, -144, 72, 120, 80, 120],
        21: [56, 120, 144, 44, 108, 168, 20, 52, 88, 72, 72, -144, 84, 180, 216, 44, 108, 168, -48, -432, -1440, 72, 72, -144, 56, 120, 144],
        22: [168, 108, 44, 64, 64, 32, 168, 108, 44, 216, 180, 84, -192, 0, 32, 216, 180, 84, -144, 72, 72, -1152, -384, -64, -144, 72, 72],
        24: [44, 108, 168, 32, 64, 64, 44, 108, 168, 84, 180, 216, 32, 0, -192, 84, 180, 216, 72, 72, -144, -64, -384, -1152, 72, 72, -144],
        25: [88, 52, 20, 168, 108, 44, 144, 120, 56, 168, 108, 44, 216, 180, 84, -144, 72, 72, 144, 120, 56, -144, 72, 72, -1440, -432, -48],
        26: [52, 56, 52, 108, 104, 108, 120, 80, 120, 108, 104, 108, 180, 120, 180, 72, -144, 72, 120, 80, 120, 72, -144, 72, -432, -1056, -432],
        27: [20, 52, 88, 44, 108, 168, 56, 120, 144, 44, 108, 168, 84, 180, 216, 72, 72, -144, 56, 120, 144, 72, 72, -144, -48, -432, -1440],
    },
    "B12": {
        1: [-270, 540, 270, -540, 120, 60, -270, 60, 30, -135, 270, 135, -270, 60, 30, -135, 30, 15, -45, 90, 45, -90, 20, 10, -45, 10, 5],
        2: [-540, 0, 540, -120, 0, 120, -60, 0, 60, -270, 0, 270, -60, 0, 60, -30, 0, 30, -90, 0, 90, -20, 0, 20, -10, 0, 10],
        3: [-270, -540, 270, -60, -120, 540, -30, -60, 270, -135, -270, 135, -30, -60, 270, -15, -30, 135, -45, -90, 45, -10, -20, 90, -5, -10, 45],
        4: [540, -120, -60, 0, 0, 0, -540, 120, 60, 270, -60, -30, 0, 0, 0, -270, 60, 30, 90, -20, -10, 0, 0, 0, -90, 20, 10],
        5: [120, 0, -120, 0, 0, 0, -120, 0, 120, 60, 0, -60, 0, 0, 0, -60, 0, 60, 20, 0, -20, 0, 0, 0, -20, 0, 20],
        6: [60, 120, -540, 0, 0, 0, -60, -120, 540, 30, 60, -270, 0, 0, 0, -30, -60, 270, 10, 20, -90, 0, 0, 0, -10, -20, 90],
        7: [270, -60, -30, 540, -120, -60, 270, -540, -270, 135, -30, -15, 270, -60, -30, 135, -270, -135, 45, -10, -5, 90, -20, -10, 45, -90, -45],
        8: [60, 0, -60, 120, 0, -120, 540, 0, -540, 30, 0, -30, 60, 0, -60, 270, 0, -270, 10, 0, -10, 20, 0, -20, 90, 0, -90],
        9: [30, 60, -270, 60, 120, -540, 270, 540, -270, 15, 30, -135, 30, 60, -270, 135, 270, -135, 5, 10, -45, 10, 20, -90, 45, 90, -45],
        10: [-135, 270, 135, -270, 60, 30, -135, 30, 15, -180, 360, 180, -360, 80, 40, -180, 40, 20, -135, 270, 135, -270, 60, 30, -135, 30, 15],
        11: [-270, 0, 270, -60, 0, 60, -30, 0, 30, -360, 0, 360, -80, 0, 80, -40, 0, 40, -270, 0, 270, -60, 0, 60, -30, 0, 30],
        12: [-135, -270, 135, -30, -60, 270, -15, -30, 135, -180, -360, 180, -40, -80, 360, -20, -40, 180, -135, -270, 135, -30, -60, 270, -15, -30, 135],
        13: [270, -60, -30, 0, 0, 0, -270, 60, 30, 360, -80, -40, 0, 0, 0, -360, 80, 40, 270, -60, -30, 0, 0, 0, -270, 60, 30],
        14: [60, 0, -60, 0, 0, 0, -60, 0, 60, 80, 0, -80, 0, 0, 0, -80, 0, 80, 60, 0, -60, 0, 0, 0, -60, 0, 60],
        15: [30, 60, -270, 0, 0, 0, -30, -60, 270, 40, 80, -360, 0, 0, 0, -40, -80, 360, 30, 60, -270, 0, 0, 0, -30, -60, 270],
        16: [135, -30, -15, 270, -60, -30, 135, -270, -135, 180, -40, -20, 360, -80, -40, 180, -360, -180, 135, -30, -15, 270, -60, -30, 135, -270, -135],
        17: [30, 0, -30, 60, 0, -60, 270, 0, -270, 40, 0, -40, 80, 0, -80, 360, 0, -360, 30, 0, -30, 60, 0, -60, 270, 0, -270],
        18: [15, 30, -135, 30, 60, -270, 135, 270, -135, 20, 40, -180, 40, 80, -360, 180, 360, -180, 15, 30, -135, 30, 60, -270, 135, 270, -135],
        19: [-45, 90, 45, -90, 20, 10, -45, 10, 5, -135, 270, 135, -270, 60, 30, -135, 30, 15, -270, 540, 270, -540, 120, 60, -270, 60, 30],
        20: [-90, 0, 90, -20, 0, 20, -10, 0, 10, -270, 0, 270, -60, 0, 60, -30, 0, 30, -540, 0, 540, -120, 0, 120, -60, 0, 60],
        21: [-45, -90, 45, -10, -20, 90, -5, -10, 45, -135, -270, 135, -30, -60, 270, -15, -30, 135, -270, -540, 270, -60, -120, 540, -30, -60, 270],
        22: [90, -20, -10, 0, 0, 0, -90, 20, 10, 270, -60, -30, 0, 0, 0, -270, 60, 30, 540, -120, -60, 0, 0, 0, -540, 120, 60],
        23: [20, 0, -20, 0, 0, 0, -20, 0, 20, 60, 0, -60, 0, 0, 0, -60, 0, 60, 120, 0, -120, 0, 0, 0, -120, 0, 120],
        24: [10, 20, -90, 0, 0, 0, -10, -20, 90, 30, 60, -270, 0, 0, 0, -30, -60, 270, 60, 120, -540, 0, 0, 0, -60, -120, 540],
        25: [45, -10, -5, 90, -20, -10, 45, -90, -45, 135, -30, -15, 270, -60, -30, 135, -270, -135, 270, -60, -30, 540, -120, -60, 270, -540, -270],
        26: [10, 0, -10, 20, 0, -20, 90, 0, -90, 30, 0, -30, 60, 0, -60, 270, 0, -270, 60, 0, -60, 120, 0, -120, 540, 0, -540],
        27: [5, 10, -45, 10, 20, -90, 45, 90, -45, 15, 30, -135, 30, 60, -270, 135, 270, -135, 30, 60, -270, 60, 120, -540, 270, 540, -270],
    },
}
