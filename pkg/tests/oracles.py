"""Pure-Python reference computations, independent of the numpy engines."""

import math


def brute_force(bodies, g, eps):
    """Loop over all ordered pairs; returns (forces, amplitudes) as lists."""
    forces, amps = [], []
    for i in bodies:
        fx = fy = a = 0.0
        for j in bodies:
            if j is i:
                continue
            dx = float(j.position[0] - i.position[0])
            dy = float(j.position[1] - i.position[1])
            r = math.sqrt(dx * dx + dy * dy + eps * eps)
            a += g * i.mass * j.mass / r
            fx += g * i.mass * j.mass * dx / r**3
            fy += g * i.mass * j.mass * dy / r**3
        forces.append((fx, fy))
        amps.append(a)
    return forces, amps
