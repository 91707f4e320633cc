"""Printed state-count rows, transcribed independently of the dataset.

Each triple is (row label, DOF count, printed per-DOF state count). The
dataset stores ranges and resolutions; these tables store only the printed
counts, so agreement between the two is a real check on the transcription,
not a tautology. Platforms here are the ones whose rows come from printed
tables (the equation-only variants are excluded on purpose).
"""

TABLE1_NAO = [
    ("l/r hand", 2, 2),
    ("head yaw", 1, 2390),
    ("head pitch", 1, 680),
    ("l/r shoulder pitch", 2, 2390),
    ("l/r shoulder yaw", 2, 2390),
    ("l/r shoulder roll", 2, 865),
    ("l/r wrist yaw", 2, 2090),
    ("pelvis", 1, 1076),
    ("l/r hip roll", 2, 669),
    ("l/r hip pitch", 2, 1157),
    ("l/r knee pitch", 2, 1263),
    ("l/r ankle pitch", 2, 1211),
    ("l/r ankle roll", 2, 669),
]

TABLE3_BELLAGIO = [
    ("Oarsmen RX", 208, 160),
    ("Oarsmen RY", 208, 160),
    ("Oarsmen water", 208, 2),
    ("Shooters", 1175, 2),
    ("lights", 6200, 13),
]

APPENDIX_ROWS = {
    "Baxter": [
        ("l/r S1", 2, 2),
        ("l/r E1", 2, 1530),
        ("l/r W1", 2, 2100),
        ("l/r S0", 2, 1950),
        ("l/r E0", 2, 3500),
        ("l/r W0", 2, 3505),
        ("l/r W2", 2, 3505),
    ],
    "Khepera IV": [
        ("l/r wheel", 2, 3600),
    ],
    "Roomba": [
        ("l/r wheel", 2, 3600),
    ],
    "Kismet": [
        ("l/r ears pitch", 2, 1350),
        ("l/r ears yaw", 2, 450),
        ("l/r eyelids", 2, 30),
        ("l/r brows pitch", 2, 200),
        ("l/r lips", 2, 600),
        ("jaw", 1, 450),
    ],
    "PR2": [
        ("l/r shoulder pan", 2, 1700),
        ("l/r shoulder tilt", 2, 1150),
        ("l/r upper arm roll", 2, 2700),
        ("l/r elbow flex", 2, 1400),
        ("l/r forearm roll", 2, 3600),
        ("l/r wrist pitch", 2, 1300),
        ("l/r wrist roll", 2, 3600),
        ("head pan", 1, 3500),
        ("head tilt", 1, 1150),
    ],
    "Big Dog": [
        ("each leg", 20, 1875),
    ],
    "ASIMO": [
        ("head", 3, 1875),
        ("arms", 14, 1875),
        ("hands", 4, 1875),
        ("torso", 1, 1875),
        ("legs", 12, 1875),
    ],
    "Little Dog": [
        ("l/r front knee RY", 2, 2340),
        ("l/r front hip RX", 2, 680),
        ("l/r front hip RY", 2, 337),
        ("l/r back knee RY", 2, 2340),
        ("l/r back hip RX", 2, 680),
        ("l/r back hip RY", 2, 337),
    ],
    "Robonaut2": [
        ("head yaw/pitch/roll", 3, 1875),
        ("l/r hands", 24, 1875),
        ("l/r arms", 14, 1875),
    ],
    "KeepOn": [
        ("tilt", 1, 1000),
        ("pan", 1, 4500),
        ("pon", 1, 1250),
        ("side", 1, 625),
    ],
    "RoboSapien": [
        ("l/r elbows", 2, 1800),
        ("l/r shoulders", 2, 1800),
        ("torso", 1, 1350),
        ("l/r hips", 2, 1200),
    ],
    "Darwin": [
        ("neck pitch", 1, 500),
        ("neck roll", 1, 1800),
        ("l/r elbow", 2, 1500),
        ("l/r shoulder rotation", 2, 2000),
        ("l/r shoulder compression", 2, 300),
        ("l/r knee", 2, 1500),
        ("l/r foot", 2, 900),
        ("l/r waist rotation", 2, 300),
        ("l/r knee/foot", 2, 1500),
        ("l/r waist bend", 2, 1000),
    ],
    "Aibo": [
        ("head pan", 1, 1780),
        ("head tilt", 1, 1250),
        ("head roll", 1, 580),
        ("shoulders", 4, 1000),
        ("torso", 1, 2340),
        ("knees", 4, 1750),
        ("l/r ears", 2, 200),
        ("tail (front to back)", 1, 450),
        ("tail (left to right)", 1, 250),
    ],
    "Packbot": [
        ("shoulder rot.", 1, 3600),
        ("shoulder pivot", 1, 2200),
        ("E1 pivot", 1, 3400),
        ("E2 pivot", 1, 3400),
        ("gripper rot.", 1, 3600),
        ("gripper I/O", 1, 1800),
        ("head rot.", 1, 3600),
        ("flipper", 1, 3600),
    ],
    "Simon": [
        ("torso", 2, 1500),
        ("l/r arm", 14, 2000),
        ("face", 5, 2000),
    ],
    "Cheetah": [
        ("hip rot.", 4, 300),
        ("hip", 4, 1500),
        ("knee", 4, 2000),
        ("spine", 1, 200),
    ],
    "LBR iiwa": [
        ("axis 1", 1, 3400),
        ("axis 2", 1, 2400),
        ("axis 3", 1, 3400),
        ("axis 4", 1, 2400),
        ("axis 5", 1, 3400),
        ("axis 6", 1, 2400),
        ("axis 7", 1, 3500),
    ],
    "KR60HA": [
        ("axis 1", 1, 3700),
        ("axis 2", 1, 1700),
        ("axis 3", 1, 1780),
        ("axis 4", 1, 7000),
        ("axis 5", 1, 2380),
        ("axis 6", 1, 7000),
    ],
}

TABLE_ROWS = {
    "NAO (Table 1)": TABLE1_NAO,
    "Bellagio (base)": TABLE3_BELLAGIO,
    **APPENDIX_ROWS,
}

# Printed transistor counts per platform (the NAO figure comes from the
# platform description, since its table row is blank).
PROCESSOR_ROWS = {
    "NAO (as printed)": ("ATOM Z530", 47_000_000),
    "Baxter": ("3rd Gen Intel Core i7-3770", 1_400_000_000),
    "Khepera IV": ("ARM Cortex-A8", 2_000_000_000),
    "Roomba": ("(unspecified)", 1_000_000),
    "Kismet": ("Motorola 68332 (4)", 1_680_000),
    "PR2": ("Two Quad-Core i7 Xeon (8 cores)", 1_462_000_000),
    "Big Dog": ("Pentium CPU", 1_300_000_000),
    "ASIMO": ("Pentium III-M 1.2 GHz", 44_000_000),
    "Little Dog": ("Pentium CPU", 2_000_000_000),
    "Robonaut2": ("(unspecified)", 262_200_000),
    "KeepOn": ("PS234", 1_000_000),
    "RoboSapien": ("200MHz ARM9", 26_000_000),
    "Darwin": ("Intel Atom Z510", 47_000_000),
    "Aibo": ("64 bit RISC", 1_000_000),
    "Packbot": ("Pentium 3", 45_000_000),
    "Simon": ("(unspecified)", 2_000_000_000),
    "Cheetah": ("(unspecified)", 731_000_000),
    "LBR iiwa": ("(unspecified)", 731_000_000),
    "KR60HA": ("(unspecified)", 100_000_000),
}

# Row counts of the printed mechanical tables, for the completeness audit.
N_TABLE1_ROWS = 13
N_TABLE3_ROWS = 5
N_APPENDIX_ROWS = 94
