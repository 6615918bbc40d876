"""Reference vertex coordinates, rounded to 4 decimals."""

COORD_PRECISION = 5e-4

R4 = [(0, 0), (0.5000, 0.5000), (0, 1), (-0.5000, 0.5000)]

R6 = [(0, 0), (0.4330, 0.2500), (0.4330, 0.7500), (0, 1), (-0.4330, 0.7500), (-0.4330, 0.2500)]

R36 = [(0, 0), (0.3660, 0.3660), (0.5000, 0.8660), (0, 1), (-0.5000, 0.8660), (-0.3660, 0.3660)]

B8 = [
    (0, 0), (0.2957, 0.2043), (0.5000, 0.5000), (0.4114, 0.9114),
    (0, 1), (-0.4114, 0.9114), (-0.5000, 0.5000), (-0.2957, 0.2043),
]

V8 = [
    (0, 0), (0.2983, 0.2128), (0.5000, 0.5188), (0.4217, 0.9067),
    (0, 1), (-0.4217, 0.9067), (-0.5000, 0.5188), (-0.2983, 0.2128),
]

D16 = [
    (0, 0), (0.1860, 0.0566), (0.3576, 0.1481), (0.4811, 0.2983),
    (0.5000, 0.4919), (0.4428, 0.6810), (0.3495, 0.8552), (0.1966, 0.9805),
    (0, 1), (-0.1966, 0.9805), (-0.3495, 0.8552), (-0.4428, 0.6810),
    (-0.5000, 0.4919), (-0.4811, 0.2983), (-0.3576, 0.1481), (-0.1860, 0.0566),
]

D32 = [
    (0, 0), (0.0970, 0.0144), (0.1921, 0.0382), (0.2807, 0.0801), (0.3534, 0.1460),
    (0.4118, 0.2247), (0.4622, 0.3088), (0.4952, 0.4011), (0.5000, 0.4990),
    (0.4856, 0.5962), (0.4617, 0.6915), (0.4197, 0.7803), (0.3538, 0.8531),
    (0.2749, 0.9116), (0.1906, 0.9621), (0.0981, 0.9952), (0, 1),
    (-0.0981, 0.9952), (-0.1906, 0.9621), (-0.2749, 0.9116), (-0.3538, 0.8531),
    (-0.4197, 0.7803), (-0.4617, 0.6915), (-0.4856, 0.5962), (-0.5000, 0.4990),
    (-0.4952, 0.4011), (-0.4622, 0.3088), (-0.4118, 0.2247), (-0.3534, 0.1460),
    (-0.2807, 0.0801), (-0.1921, 0.0382), (-0.0970, 0.0144),
]
