from .compute_mixin import ComputeMixin
from .shelling_mixin import ShellingMixin
from .verify_mixin import VerifyMixin

__all__ = [
    "ComputeMixin",
    "ShellingMixin",
    "VerifyMixin"
]
