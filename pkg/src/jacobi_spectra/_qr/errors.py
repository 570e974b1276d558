"""Exceptions shared by the compiled and pure-Python QR kernels."""


class QRBreakdown(Exception):
    """A complex rotation denominator vanished; the tridiagonal chase cannot proceed."""

    def __init__(self, message="rotation breakdown in tridiagonal QR", partial=None):
        super().__init__(message)
        self.partial = partial


class QRConvergenceError(Exception):
    """The sweep budget was exhausted before full deflation."""

    def __init__(self, message="QR iteration did not converge", partial=None):
        super().__init__(message)
        self.partial = partial
