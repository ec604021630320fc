#pragma once

#include "qaoaplus/statevector.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qaoaplus {

/// Elements are 1-based; at most 64 so a set fits in one word.
inline constexpr unsigned kMaxUniverse = 64;

/**
 * Minimum exact cover instance: universe {1..m} and n subsets S_1..S_n.
 *
 * Construction validates everything: elements in range, no empty set, the
 * union covers the universe, n >= 2, and no set equals the whole universe.
 * Immutable afterwards.
 */
class MecInstance {
  public:
    MecInstance(unsigned universe_size, std::vector<std::vector<unsigned>> sets);

    [[nodiscard]] unsigned universe_size() const noexcept { return m_; }
    [[nodiscard]] unsigned num_sets() const noexcept {
        return static_cast<unsigned>(sets_.size());
    }
    /// Sorted elements of set i (0-based index).
    [[nodiscard]] const std::vector<unsigned> &set(unsigned i) const {
        return sets_.at(i);
    }
    [[nodiscard]] const std::vector<std::vector<unsigned>> &sets() const noexcept {
        return sets_;
    }
    /// Bit e-1 set iff element e is in set i.
    [[nodiscard]] Mask element_bits(unsigned i) const { return bits_.at(i); }
    /// omega_i = |S_i|
    [[nodiscard]] unsigned weight(unsigned i) const {
        return static_cast<unsigned>(sets_.at(i).size());
    }
    [[nodiscard]] Mask universe_bits() const noexcept;

    friend bool operator==(const MecInstance &a, const MecInstance &b) {
        return a.m_ == b.m_ && a.sets_ == b.sets_;
    }

  private:
    unsigned m_;
    std::vector<std::vector<unsigned>> sets_;
    std::vector<Mask> bits_;
};

/**
 * Tail-assignment instance: flights {1..|F|}, routes r_i as flight sets,
 * and a nonnegative cost per route.
 */
class TailInstance {
  public:
    TailInstance(unsigned flight_count, std::vector<std::vector<unsigned>> routes,
                 std::vector<double> costs);

    [[nodiscard]] unsigned flight_count() const noexcept { return flights_; }
    [[nodiscard]] unsigned num_routes() const noexcept {
        return static_cast<unsigned>(routes_.size());
    }
    [[nodiscard]] const std::vector<std::vector<unsigned>> &routes() const noexcept {
        return routes_;
    }
    [[nodiscard]] const std::vector<double> &costs() const noexcept {
        return costs_;
    }
    [[nodiscard]] unsigned weight(unsigned i) const {
        return static_cast<unsigned>(routes_.at(i).size());
    }
    [[nodiscard]] Mask flight_bits(unsigned i) const { return bits_.at(i); }

    /// Same routes viewed as an MEC instance (costs dropped).
    [[nodiscard]] MecInstance induced_mec() const;

    friend bool operator==(const TailInstance &a, const TailInstance &b) {
        return a.flights_ == b.flights_ && a.routes_ == b.routes_ &&
               a.costs_ == b.costs_;
    }

  private:
    unsigned flights_;
    std::vector<std::vector<unsigned>> routes_;
    std::vector<double> costs_;
    std::vector<Mask> bits_;
};

/// Conflict graph: vertex per set, edge iff the two sets intersect.
class ConflictGraph {
  public:
    explicit ConflictGraph(unsigned n);

    /// Adds the undirected edge {i, j}; self-loops are rejected.
    void add_edge(unsigned i, unsigned j);

    [[nodiscard]] unsigned num_vertices() const noexcept {
        return static_cast<unsigned>(adjacency_.size());
    }
    [[nodiscard]] bool has_edge(unsigned i, unsigned j) const;
    /// Neighborhood of v as a vertex bit mask.
    [[nodiscard]] Mask neighbors(unsigned v) const { return adjacency_.at(v); }
    /// Edges (i, j) with i < j, lexicographic.
    [[nodiscard]] std::vector<std::pair<unsigned, unsigned>> edges() const;
    [[nodiscard]] std::size_t num_edges() const;
    [[nodiscard]] bool connected() const;

    friend bool operator==(const ConflictGraph &, const ConflictGraph &) = default;

  private:
    std::vector<Mask> adjacency_;
};

/// Objective weights with lambda1 > lambda2 > 0.
class Lambdas {
  public:
    Lambdas(double lambda1, double lambda2);
    [[nodiscard]] double lambda1() const noexcept { return l1_; }
    [[nodiscard]] double lambda2() const noexcept { return l2_; }

  private:
    double l1_;
    double l2_;
};

/// Tail-assignment weights with lambda1 > lambda2 > lambda3 > 0.
class TailLambdas {
  public:
    TailLambdas(double lambda1, double lambda2, double lambda3);
    [[nodiscard]] double lambda1() const noexcept { return l1_; }
    [[nodiscard]] double lambda2() const noexcept { return l2_; }
    [[nodiscard]] double lambda3() const noexcept { return l3_; }

  private:
    double l1_;
    double l2_;
    double l3_;
};

ConflictGraph conflict_graph(const MecInstance &instance);
ConflictGraph conflict_graph(const TailInstance &instance);

/// lambda2 = 1/(n*m - 2), lambda1 = n*lambda2.
Lambdas default_lambdas(unsigned n, unsigned m);

/// lambda1, lambda2 from default_lambdas(|R|, |F|); lambda3 = lambda2/|R|.
TailLambdas default_tail_lambdas(const TailInstance &instance);

/// lambda1 * sum_{i in mask} omega_i - lambda2 * popcount(mask). No feasibility check.
double objective_value(const MecInstance &instance, const Lambdas &lambdas,
                       Mask mask);

double tail_objective_value(const TailInstance &instance,
                            const TailLambdas &lambdas, Mask mask);

bool is_independent(const ConflictGraph &graph, Mask mask);

/// Every element of the universe covered exactly once.
bool is_exact_cover(const MecInstance &instance, Mask mask);

/// Raw set-partitioning constraint sum_r a_fr x_r = 1 for every flight.
bool is_route_partition(const TailInstance &instance, Mask mask);

double selection_cost(const TailInstance &instance, Mask mask);

} // namespace qaoaplus
