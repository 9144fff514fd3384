# NOTE: oracle and scale depend on instances, which imports this package, so only handles live here
from direction_space.cos.handle import Algebraic, COSHandle, StabilizerTuple, TidyBelow, parse_handle

__all__ = ["Algebraic", "COSHandle", "StabilizerTuple", "TidyBelow", "parse_handle"]
