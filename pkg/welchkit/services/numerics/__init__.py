from .linalg import (
    eig_hermitian,
    solve_hpd,
    matrix_power_trace,
    hermitian_function,
    inverse_sqrt,
    as_square,
)

__all__ = ['eig_hermitian', 'solve_hpd', 'matrix_power_trace', 'hermitian_function', 'inverse_sqrt', 'as_square']
