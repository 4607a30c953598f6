# Oriented Steiner triple systems, their quasigroup extensions and the extension cipher
from .cipher import decrypt, encrypt, issue_message_keys, keygen_general, keygen_sts, keyspace_size
from .extension import (
    canonical_oriented_steiner_quasigroup,
    check_theorem1,
    congruence_classes,
    corollary1_isomorphisms,
    f_extension,
    oriented_steiner_quasigroup,
    projection,
    schreier_extension,
)
from .laws import check_law, check_laws, find_inverse_witness, regular_orbits, regular_permutations
from .quasigroup import is_latin, k3, principal_isotope, q3, steiner_quasigroup, sts_from_quasigroup, z3
from .sts import construct_sts, count_orientations, orient, orientation_value, validate_sts

__version__ = "1.0.0"

__all__ = [
    "canonical_oriented_steiner_quasigroup",
    "check_law",
    "check_laws",
    "check_theorem1",
    "congruence_classes",
    "construct_sts",
    "corollary1_isomorphisms",
    "count_orientations",
    "decrypt",
    "encrypt",
    "f_extension",
    "find_inverse_witness",
    "is_latin",
    "issue_message_keys",
    "k3",
    "keygen_general",
    "keygen_sts",
    "keyspace_size",
    "orient",
    "orientation_value",
    "oriented_steiner_quasigroup",
    "principal_isotope",
    "projection",
    "q3",
    "regular_orbits",
    "regular_permutations",
    "schreier_extension",
    "steiner_quasigroup",
    "sts_from_quasigroup",
    "validate_sts",
    "z3",
]
