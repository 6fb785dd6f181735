"""Deck reconstruction on the hypercube Z_2^n.

Decks of sets and multisets, the Walsh-Hadamard oracle for
indistinguishability, lower-bound witness pairs, classification of pairs
at maximal distinguishing number, and the closed-form reconstruction
number with an exhaustive check for small n.
"""

__version__ = "0.1.0"

from .bounds import (ExhaustiveResult, exhaustive_reconstruction_number, predicate,
                     reconstruction_number_formula, set_reconstruction_number, tee)
from .deckset import (DeckFingerprint, Multiset, SubsetT, find_translation,
                      linear_image, multiset_deck_value, multiset_decks_equal,
                      set_deck, set_decks_equal, translate)
from .errors import (DeckReconError, DimensionMismatchError, InfeasibleError,
                     InstanceTooLargeError, InvariantViolationError, NotAMultisetError,
                     TranslatesInputError, VerificationFailureError)
from .gf2core import (AffineCoset, GroupElement, LinearMap, apply, canonical_translate,
                      dual, enumerate_coset, pairing)
from .spectral import (Distinction, Spectrum, ZeroSumWitness, distinguishing_number,
                       fourier_indistinguishable, inverse_wht, separating_projection, wht)
from .structure import (Classification, StandardParams, classify_pair, max_multiplicity,
                        standard_multiset, standard_pair, standard_spectrum,
                        standardize_pair)
from .witness import WitnessReport, build_witness, hyperplane_cosets, verify_witness
