#pragma once
#include <stdexcept>
#include <string>

namespace hallq {

enum class errc {
    parse_error,
    loop_found,
    multiple_arrow,
    oriented_cycle,
    bad_relation,
    unknown_vertex,
    index_mismatch,
    cap_too_small,
    cap_exceeded,
    not_square,
    non_homogeneous,
    zero_specialization,
    incomplete_roots,
    shape_mismatch,
    resolution_too_long,
    global_dimension_too_large,
    directedness_failure,
    root_bijection_failure,
    inconsistent_decomposition,
    degree_out_of_bounds,
    relation_nonzero,
    dimension_mismatch,
    golden_mismatch,
};

const char* errc_name(errc c);

struct hq_error : std::runtime_error {
    errc code;
    hq_error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

} // namespace hallq
