#include "qaoaplus/problem.hpp"

#include "qaoaplus/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qaoaplus {

namespace {

Mask universe_mask(unsigned m) {
    return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

// Sorts, rejects duplicates, empties and out-of-range elements; returns bitset.
std::vector<Mask> normalize_sets(unsigned m, std::vector<std::vector<unsigned>> &sets,
                                 const char *noun) {
    std::vector<Mask> bits;
    bits.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto &s = sets[i];
        const std::string label = std::string(noun) + " " + std::to_string(i + 1);
        if (s.empty())
            throw InstanceError(label + " is empty");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InstanceError(label + " lists an element twice");
        Mask b = 0;
        for (unsigned e : s) {
            if (e < 1 || e > m)
                throw InstanceError(label + ": element " + std::to_string(e) +
                                    " outside 1.." + std::to_string(m));
            b |= Mask{1} << (e - 1);
        }
        bits.push_back(b);
    }
    return bits;
}

void check_coverage(unsigned m, const std::vector<Mask> &bits) {
    Mask all = 0;
    for (Mask b : bits)
        all |= b;
    const Mask missing = universe_mask(m) & ~all;
    if (missing != 0)
        throw InstanceError("union of sets does not cover the universe; element " +
                            std::to_string(std::countr_zero(missing) + 1) +
                            " is missing");
}

void check_mask(Mask mask, unsigned n) {
    if (n < 64 && (mask >> n) != 0)
        throw IndexError("selection mask has bits beyond " + std::to_string(n) +
                         " sets");
}

} // namespace

MecInstance::MecInstance(unsigned universe_size,
                         std::vector<std::vector<unsigned>> sets)
    : m_(universe_size), sets_(std::move(sets)) {
    if (m_ < 1 || m_ > kMaxUniverse)
        throw InstanceError("universe size must be in [1, 64], got " +
                            std::to_string(m_));
    if (sets_.size() < 2)
        throw InstanceError("need at least two sets, got " +
                            std::to_string(sets_.size()));
    if (sets_.size() > 64)
        throw InstanceError("at most 64 sets are supported");
    bits_ = normalize_sets(m_, sets_, "set");
    check_coverage(m_, bits_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] == universe_bits())
            throw InstanceError("set " + std::to_string(i + 1) +
                                " equals the whole universe");
}

Mask MecInstance::universe_bits() const noexcept { return universe_mask(m_); }

TailInstance::TailInstance(unsigned flight_count,
                           std::vector<std::vector<unsigned>> routes,
                           std::vector<double> costs)
    : flights_(flight_count), routes_(std::move(routes)), costs_(std::move(costs)) {
    if (flights_ < 1 || flights_ > kMaxUniverse)
        throw InstanceError("flight count must be in [1, 64], got " +
                            std::to_string(flights_));
    if (routes_.empty() || routes_.size() > 64)
        throw InstanceError("route count must be in [1, 64]");
    if (costs_.size() != routes_.size())
        throw InstanceError("expected one cost per route");
    for (std::size_t i = 0; i < costs_.size(); ++i)
        if (!std::isfinite(costs_[i]) || costs_[i] < 0.0)
            throw InstanceError("route " + std::to_string(i + 1) +
                                " has a negative or non-finite cost");
    bits_ = normalize_sets(flights_, routes_, "route");
    check_coverage(flights_, bits_);
}

MecInstance TailInstance::induced_mec() const {
    return MecInstance(flights_, routes_);
}

ConflictGraph::ConflictGraph(unsigned n) : adjacency_(n, 0) {
    if (n > 64)
        throw SizeError("conflict graph supports at most 64 vertices");
}

void ConflictGraph::add_edge(unsigned i, unsigned j) {
    if (i >= num_vertices() || j >= num_vertices())
        throw IndexError("edge endpoint out of range");
    if (i == j)
        throw IndexError("self-loop on vertex " + std::to_string(i));
    adjacency_[i] |= Mask{1} << j;
    adjacency_[j] |= Mask{1} << i;
}

bool ConflictGraph::has_edge(unsigned i, unsigned j) const {
    return (adjacency_.at(i) >> j) & 1u;
}

std::vector<std::pair<unsigned, unsigned>> ConflictGraph::edges() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < num_vertices(); ++i)
        for (unsigned j = i + 1; j < num_vertices(); ++j)
            if (has_edge(i, j))
                out.emplace_back(i, j);
    return out;
}

std::size_t ConflictGraph::num_edges() const {
    std::size_t twice = 0;
    for (Mask a : adjacency_)
        twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
}

bool ConflictGraph::connected() const {
    const unsigned n = num_vertices();
    if (n <= 1)
        return true;
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1)
            next |= adjacency_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    return seen == all;
}

Lambdas::Lambdas(double lambda1, double lambda2) : l1_(lambda1), l2_(lambda2) {
    if (!(std::isfinite(l1_) && std::isfinite(l2_) && l1_ > l2_ && l2_ > 0.0))
        throw DomainError("weights must satisfy lambda1 > lambda2 > 0");
}

TailLambdas::TailLambdas(double lambda1, double lambda2, double lambda3)
    : l1_(lambda1), l2_(lambda2), l3_(lambda3) {
    if (!(std::isfinite(l1_) && std::isfinite(l2_) && std::isfinite(l3_) &&
          l1_ > l2_ && l2_ > l3_ && l3_ > 0.0))
        throw DomainError("weights must satisfy lambda1 > lambda2 > lambda3 > 0");
}

namespace {

ConflictGraph graph_from_bits(const std::vector<Mask> &bits) {
    ConflictGraph g(static_cast<unsigned>(bits.size()));
    for (unsigned i = 0; i < bits.size(); ++i)
        for (unsigned j = i + 1; j < bits.size(); ++j)
            if (bits[i] & bits[j])
                g.add_edge(i, j);
    return g;
}

} // namespace

ConflictGraph conflict_graph(const MecInstance &instance) {
    std::vector<Mask> bits;
    for (unsigned i = 0; i < instance.num_sets(); ++i)
        bits.push_back(instance.element_bits(i));
    return graph_from_bits(bits);
}

ConflictGraph conflict_graph(const TailInstance &instance) {
    std::vector<Mask> bits;
    for (unsigned i = 0; i < instance.num_routes(); ++i)
        bits.push_back(instance.flight_bits(i));
    return graph_from_bits(bits);
}

Lambdas default_lambdas(unsigned n, unsigned m) {
    if (n < 2 || m < 2)
        throw DomainError("default weights need n >= 2 and m >= 2 (got n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + ")");
    const double lambda2 = 1.0 / (static_cast<double>(n) * m - 2.0);
    return Lambdas(n * lambda2, lambda2);
}

TailLambdas default_tail_lambdas(const TailInstance &instance) {
    const unsigned r = instance.num_routes();
    const auto base = default_lambdas(r, instance.flight_count());
    return TailLambdas(base.lambda1(), base.lambda2(), base.lambda2() / r);
}

double objective_value(const MecInstance &instance, const Lambdas &lambdas,
                       Mask mask) {
    check_mask(mask, instance.num_sets());
    double weight_sum = 0.0;
    for (Mask b = mask; b != 0; b &= b - 1)
        weight_sum += instance.weight(static_cast<unsigned>(std::countr_zero(b)));
    return lambdas.lambda1() * weight_sum -
           lambdas.lambda2() * static_cast<double>(std::popcount(mask));
}

double tail_objective_value(const TailInstance &instance,
                            const TailLambdas &lambdas, Mask mask) {
    check_mask(mask, instance.num_routes());
    double weight_sum = 0.0;
    double cost_sum = 0.0;
    for (Mask b = mask; b != 0; b &= b - 1) {
        const auto i = static_cast<unsigned>(std::countr_zero(b));
        weight_sum += instance.weight(i);
        cost_sum += instance.costs()[i];
    }
    return lambdas.lambda1() * weight_sum -
           lambdas.lambda2() * static_cast<double>(std::popcount(mask)) -
           lambdas.lambda3() * cost_sum;
}

bool is_independent(const ConflictGraph &graph, Mask mask) {
    check_mask(mask, graph.num_vertices());
    for (Mask b = mask; b != 0; b &= b - 1)
        if (graph.neighbors(static_cast<unsigned>(std::countr_zero(b))) & mask)
            return false;
    return true;
}

bool is_exact_cover(const MecInstance &instance, Mask mask) {
    check_mask(mask, instance.num_sets());
    Mask covered = 0;
    for (Mask b = mask; b != 0; b &= b - 1) {
        const Mask s = instance.element_bits(static_cast<unsigned>(std::countr_zero(b)));
        if (covered & s)
            return false;
        covered |= s;
    }
    return covered == instance.universe_bits();
}

bool is_route_partition(const TailInstance &instance, Mask mask) {
    check_mask(mask, instance.num_routes());
    // Count coverage per flight directly from the incidence a_{f r}.
    for (unsigned f = 1; f <= instance.flight_count(); ++f) {
        unsigned hits = 0;
        for (unsigned r = 0; r < instance.num_routes(); ++r) {
            if (!((mask >> r) & 1u))
                continue;
            const auto &route = instance.routes()[r];
            if (std::binary_search(route.begin(), route.end(), f))
                ++hits;
        }
        if (hits != 1)
            return false;
    }
    return true;
}

double selection_cost(const TailInstance &instance, Mask mask) {
    check_mask(mask, instance.num_routes());
    double total = 0.0;
    for (Mask b = mask; b != 0; b &= b - 1)
        total += instance.costs()[std::countr_zero(b)];
    return total;
}

} // namespace qaoaplus
