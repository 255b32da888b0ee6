# Canonical kernel units are ft / mph / % / mi.
# Metric inputs (OpenDRIVE, metric parameter suffixes) are converted on the
# way in; SUMO export converts back out to m and m/s.

Feet = float
Meters = float
Miles = float
Mph = float
Kmh = float
MetersPerSecond = float
Percent = float

FT_PER_M = 3.28084
MPH_PER_KMH = 0.621371
M_PER_MI = 1609.344
MS_PER_MPH = 0.44704


def m_to_ft(value: Meters) -> Feet:
    return value * FT_PER_M


def ft_to_m(value: Feet) -> Meters:
    return value / FT_PER_M


def kmh_to_mph(value: Kmh) -> Mph:
    return value * MPH_PER_KMH


def ms_to_mph(value: MetersPerSecond) -> Mph:
    return value / MS_PER_MPH


def mph_to_ms(value: Mph) -> MetersPerSecond:
    return value * MS_PER_MPH


def mi_to_m(value: Miles) -> Meters:
    return value * M_PER_MI
