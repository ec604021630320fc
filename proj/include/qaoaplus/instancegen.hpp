#pragma once

#include "qaoaplus/problem.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace qaoaplus {

/// Parameters for random instance generation.
struct GenSpec {
    unsigned n = 6;             ///< number of sets
    unsigned m = 12;            ///< universe size
    unsigned planted_size = 0;  ///< 0: drawn uniformly from 2..floor(n/2)
    std::uint64_t seed = 0;
    unsigned max_attempts = 10000;

    void validate() const;
};

struct GeneratedInstance {
    MecInstance instance;
    Mask planted = 0;      ///< the unique exact cover
    unsigned attempts = 0; ///< attempts consumed, including the accepted one
};

struct GeneratedTailInstance {
    TailInstance instance;
    Mask planted = 0;
    unsigned attempts = 0;
};

/**
 * Rejection sampler. Each attempt plants a random partition of the universe,
 * fills the remaining slots with distinct random subsets that overlap other
 * fillers, shuffles the set order, and keeps the result only if the conflict
 * graph is connected and brute force confirms the planted cover is the only
 * exact cover, the unique MEC, and the unique argmax under default weights.
 * Attempt k draws from a stream keyed by (seed, k), so the accepted instance
 * depends only on the GenSpec.
 */
GeneratedInstance generate_with_plant(const GenSpec &spec);

inline MecInstance generate(const GenSpec &spec) {
    return generate_with_plant(spec).instance;
}

/// Generated MEC instance plus route costs drawn from {0.00, 0.01, ..., cost_max},
/// kept only if the planted cover is the unique argmax under default tail weights.
GeneratedTailInstance generate_tail(const GenSpec &spec, double cost_max = 1.0);

/// Line-oriented text: `universe <m>`, then `set <e1> <e2> ... [cost <c>]`.
/// Costs are accepted and ignored.
MecInstance parse_instance(std::string_view text);
TailInstance parse_tail_instance(std::string_view text);

std::string serialize_instance(const MecInstance &instance);
std::string serialize_tail_instance(const TailInstance &instance);

MecInstance load_instance(const std::string &path);
TailInstance load_tail_instance(const std::string &path);
void write_text_file(const std::string &path, std::string_view contents);
std::string read_text_file(const std::string &path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace qaoaplus
