#include "hypercent/errors.hpp"

namespace hypercent {

const char* errc_name(errc code) {
    switch (code) {
        case errc::repeated_node: return "RepeatedNode";
        case errc::empty_block: return "EmptyBlock";
        case errc::non_positive_weight: return "NonPositiveWeight";
        case errc::unknown_node: return "UnknownNode";
        case errc::non_uniform: return "NonUniform";
        case errc::not_directed: return "NotDirected";
        case errc::non_tail_uniform: return "NonTailUniform";
        case errc::mixed_kinds: return "MixedKinds";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::wrong_arity: return "WrongArity";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::non_finite_input: return "NonFiniteInput";
        case errc::too_large: return "TooLarge";
        case errc::not_strongly_connected: return "NotStronglyConnected";
        case errc::not_converged: return "NotConverged";
        case errc::not_f_hypergraph: return "NotFHypergraph";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::empty_side: return "EmptySide";
        case errc::io_error: return "IOError";
    }
    return "UnknownError";
}

}  // namespace hypercent
