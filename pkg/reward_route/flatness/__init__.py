from .flat_trace import FlatTrace
from .state_input_trace import StateInputTrace
from .flat_trace_from_trajectory import flat_trace_from_trajectory
from .wheel_speeds import wheel_speeds, twist_from_wheel_speeds
from .diffdrive_forward import diffdrive_forward, DIFFDRIVE_INPUTS, MIN_TRANSLATION_SPEED
from .diffdrive_inverse import diffdrive_inverse
from .diffdrive_dynamics import diffdrive_dynamics
from .quadruped_forward import quadruped_forward, QUADRUPED_INPUTS
