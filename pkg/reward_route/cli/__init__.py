from .main import main
from .parser import build_parser, THREADS_VARIABLE
