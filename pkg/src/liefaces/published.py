"""Published reference values used by ``report --check`` and the regression tests."""

from __future__ import annotations

EXCEPTIONAL_CT = {"G2": 44, "F4": 259, "E6": 486, "E7": 1288, "E8": 5870}

G2_F2_FACES = (
    44, 540, 3500, 16380, 60060, 180180, 460460, 1003860, 1793220,
    2494492, 2582580, 1901900, 936740, 276060, 36808,
)

# F4 face bounds, rows i = 0..52, columns F2, F3, F5 (f0 = 259 in every column).
F4_TABLE = (
    (259, 259, 259),
    (12296, 12296, 12296),
    (307294, 307294, 307294),
    (5434832, 5434832, 5434832),
    (75841675, 75841675, 75841675),
    (898211405, 872384240, 872384240),
    (9665099080, 8425395160, 8425395160),
    (98189141960, 70096565630, 69056099840),
    (936843104470, 532679948710, 484818522370),
    (8207348294600, 4019473489850, 2942591397200),
    (65068495431940, 31469774141260, 15579780596380),
    (465307900554770, 246812512408280, 72908019801890),
    (3006871679028070, 1825555954104190, 312895574628490),
    (17600137873624250, 12284217111466790, 1357046655920900),
    (93440294896349800, 74314230778534600, 6810475068598600),
    (450286771378309775, 403688085014794580, 40032696051173735),
    (1971743019982744645, 1972544627081800135, 241874900220997225),
    (7863182337222190160, 8691999543917841515, 1351282534317191840),
    (28667776883962562710, 34659355642150540210, 6719774511823246510),
    (96053339758806527825, 125651509261850608400, 29616143389087516625),
    (297546706965222844675, 416590423956641354875, 116366415690518027125),
    (857048823513321474035, 1271376687212781173570, 410552931017085466610),
    (2305515484583856497680, 3594398180086388474800, 1308208247349691040080),
    (5805916666340273259140, 9464430118366786351880, 3780300926971447336640),
    (13691742470273968084348, 23296033020334540996348, 9933596706928762306348),
    (30203414158511162699228, 53694335012120681194316, 23781024562728215423648),
    (62222956498405788385384, 115866106264425527967208, 51939670248200359867144),
    (119545026801812836973476, 233700844962180391946332, 103609314739176120792736),
    (214032931319683517783924, 439499576816343586980164, 188951821406493657563324),
    (357111493947308465621620, 768471351552073128466780, 315309645494651593502080),
    (555564068183111798392400, 1245866340397735244442800, 481853242200739273482800),
    (806407339828295811066370, 1868141433978914243019325, 674893164389212842638110),
    (1092420574393401473029355, 2585238914432460431713295, 867084819996731389618565),
    (1380439040299677655288810, 3295440234015897348233125, 1022779365505852631873560),
    (1624553842322905438967750, 3862524944394191012523950, 1108664551104442752692090),
    (1775459827365420580030465, 4155078440267128287279730, 1105338541605402502408465),
    (1794828559813170720089615, 4093985916498066977355695, 1014223149115635950179325),
    (1670073199551033201858115, 3685614429263730593888440, 856503920963737735154830),
    (1422327363482087712114920, 3022487137167360033316040, 665073826503017218206920),
    (1101859031090233520299090, 2249556580874893485166930, 473731770600839059400350),
    (771285427381721886017930, 1512601618241344821600410, 308274771427740105664130),
    (484321425064871781237760, 913754781405029162953900, 182165928067660360915000),
    (270669335071872386276900, 492583625059817580232580, 96970862050975415599460),
    (133428150140921671860370, 235027856422964278167130, 46039249877048119561870),
    (57416514733144586383910, 98266558885147592120090, 19262564316093857041010),
    (21298963639050452896450, 35559965593024259110360, 7001144224020018463300),
    (6705076821048773378120, 10964133899498923237640, 2172346995036321314120),
    (1755155335743793388860, 2821888206480529615975, 562962158585866488085),
    (371543159139563573435, 589525752602412668315, 118360526603610225935),
    (61086632457851987623, 95994644156525073778, 19372482408185237968),
    (7316756676108737390, 11425877633680732118, 2313937523940263390),
    (567831053316383782, 884005590508296811, 179334499784124337),
    (21427586917599388, 33358701528614974, 6767339614495258),
)

F4_TABLE_FIELDS = ("F2", "F3", "F5")

G2_TOTALS = {"F2": 11746824, "F3": 4059144, "F5": 4059144, "Q": 4059144}

# Totals printed to six significant figures: (mantissa, exponent).
ROUNDED_TOTALS = {
    "F4": {"F2": ("1.57775", 25), "F3": ("3.50157", 25), "F5": ("9.63191", 24), "Q": ("9.63191", 24)},
    "E6": {"F2": ("1.66706", 38), "F3": ("2.57662", 38), "F5": ("8.22191", 37), "Q": ("8.22191", 37)},
    "E7": {"F2": ("1.44756", 65), "F3": ("1.23839", 73), "F5": ("1.68159", 64), "Q": ("1.68159", 64)},
    "E8": {"F2": ("1.85929", 121), "F3": ("1.30821", 120), "F5": ("7.2883", 119), "Q": ("1.40822", 119)},
}

TOTALS_RTOL = 5e-6
