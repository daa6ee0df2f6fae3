from .main import main, sweep_values, opposite_pairs
