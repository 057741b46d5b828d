import math
import numpy as np


def wrap_angle(angle: float) -> float:
    """
    Maps an angle to [-pi, pi).
    """
    return angle - 2 * math.pi * math.floor((angle + math.pi) / (2 * math.pi))


def bisector_heading(incoming: np.ndarray, outgoing: np.ndarray) -> float:
    """
    Direction halfway between two travel directions. A full reversal has no bisector; the incoming bearing
    turned left by pi/2 is used instead.
    """
    u_in = incoming / np.hypot(*incoming)
    u_out = outgoing / np.hypot(*outgoing)
    direction = u_in + u_out
    if np.hypot(*direction) < 1e-9:
        return math.atan2(u_in[1], u_in[0]) + math.pi / 2
    return math.atan2(direction[1], direction[0])
