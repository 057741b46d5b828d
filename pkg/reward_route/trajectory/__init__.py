from .angles import wrap_angle, bisector_heading
from .fresnel import phase_integrals
from .clothoid_segment import ClothoidSegment
from .piecewise_clothoid import PiecewiseClothoid
from .fit_g1 import fit_g1, G1_TOLERANCE
from .assign_headings import assign_headings
from .build_path import build_path
from .length import length
from .sample import sample
from .collision_free import collision_free
from .refine_collision import refine_collision
from .trajectory import Trajectory, TRAJECTORY_COLUMNS
from .parameterize_time import parameterize_time, TimingOptions, default_sample_count
