from .draw_solution import draw_solution
from .draw_fitness_history import draw_fitness_history
from .draw_complexity import draw_complexity
