"""Digit-wise XOR-like operators in base b and base -b, and the finite
transducers that compute them."""

from .numeral import (DigitString, DomainError, check_radix, double_bar,
                      from_base, from_negabase, ominus, oplus_neg, parse,
                      render, to_base, to_negabase)
from .transducer import (IsomorphismWitness, Mismatch, NonTerminatingError,
                         RunResult, Transducer, TransducerError, isomorphic,
                         minimize, product, quiescent_states, reachable,
                         relabel_outputs, relabel_outputs_with_input, run)
from .machines import (conv_n_to_negabase, conv_neg_n_to_negabase,
                       figure1_product, lemma1_machine, mult_by_b_plus_1,
                       ominus_mult_machine, theorem_machine)
from .verify import (ProofRecord, ProofReport, SweepReport, a178729,
                     check_identity, machine_proof, prove_range)

__version__ = "0.1.0"
