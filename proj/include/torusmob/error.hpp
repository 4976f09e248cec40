#pragma once

#include <stdexcept>
#include <string>

namespace torusmob {

enum class errc {
    parse_error,
    singular_map,
    undefined_cross_ratio,
    degenerate_triple,
    degenerate_quad,
    wrong_triple_class,
    not_admissible,
    negative_modulus,
    zero_coordinate,
    excluded_value,
    not_in_p,
    indeterminate,
    mixed_regime,
    zero_vector,
    not_rank_one,
    not_unimodular,
    division_by_zero,
    nonpositive_dilation,
    io_error,
};

/// Library errors carry a code so callers (notably the CLI) can map them
/// onto exit-code families without string matching.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "PARSE_ERROR";
        case errc::singular_map: return "SINGULAR_MAP";
        case errc::undefined_cross_ratio: return "UNDEFINED_CROSS_RATIO";
        case errc::degenerate_triple: return "DEGENERATE_TRIPLE";
        case errc::degenerate_quad: return "DEGENERATE_QUAD";
        case errc::wrong_triple_class: return "WRONG_TRIPLE_CLASS";
        case errc::not_admissible: return "NOT_ADMISSIBLE";
        case errc::negative_modulus: return "NEGATIVE_MODULUS";
        case errc::zero_coordinate: return "ZERO_COORDINATE";
        case errc::excluded_value: return "EXCLUDED_VALUE";
        case errc::not_in_p: return "NOT_IN_P";
        case errc::indeterminate: return "INDETERMINATE";
        case errc::mixed_regime: return "MIXED_REGIME";
        case errc::zero_vector: return "ZERO_VECTOR";
        case errc::not_rank_one: return "NOT_RANK_ONE";
        case errc::not_unimodular: return "NOT_UNIMODULAR";
        case errc::division_by_zero: return "DIVISION_BY_ZERO";
        case errc::nonpositive_dilation: return "NONPOSITIVE_DILATION";
        case errc::io_error: return "IO_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace torusmob
