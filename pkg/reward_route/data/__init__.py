from .write_csv import write_csv, write_bench_csv, FLOAT_FORMAT
from .solution_document import SolutionDocument, build_solution_document
from .reevaluate_solution import reevaluate_solution
from .cached import cached
