"""Binary sequences of period p^r from Euler quotients and their (k-error)
linear complexity over GF(2)."""

from .cyclotomy import (
    CyclotomicPartition,
    GeneralizedPartition,
    build_generalized,
    build_partition,
    build_partition_via_generator,
    class_of,
)
from .errors import ParameterError, RangeError, ResourceLimitError, UnsupportedError
from .gf2poly import Gf2Poly, cyclotomic_factor, divides, from_sequence, is_irreducible_context
from .numtheory import (
    PrimePowerParams,
    euler_quotient,
    find_generator,
    is_two_primitive_mod_p2,
    mod_pow,
    multiplicative_order,
    phi_prime_power,
)
from .seqgen import (
    BinarySequence,
    gen_complement,
    gen_euler_classes,
    gen_euler_threshold,
    gen_xzlh,
    read_bitstring,
    weight,
    write_bitstring,
)

__version__ = "0.1.0"
