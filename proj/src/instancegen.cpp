#include "qaoaplus/instancegen.hpp"

#include "qaoaplus/errors.hpp"
#include "qaoaplus/oracle.hpp"
#include "qaoaplus/random.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace qaoaplus {

void GenSpec::validate() const {
    if (n < 2)
        throw DomainError("generator needs n >= 2");
    if (m < n)
        throw DomainError("generator needs m >= n");
    if (n > kMaxOracleSets)
        throw SizeError("generator is capped at " + std::to_string(kMaxOracleSets) +
                        " sets");
    if (m > kMaxUniverse)
        throw SizeError("universe size is capped at 64");
    if (planted_size != 0 && (planted_size < 2 || planted_size > n))
        throw DomainError("planted size must be in [2, n]");
    if (max_attempts == 0)
        throw DomainError("max_attempts must be positive");
}

namespace {

Mask bits_of(const std::vector<unsigned> &set) {
    Mask b = 0;
    for (unsigned e : set)
        b |= Mask{1} << (e - 1);
    return b;
}

// One rejection-sampling attempt; nullopt when the draw is rejected.
std::optional<GeneratedInstance> attempt(const GenSpec &spec, unsigned index) {
    SplitMix64 rng(mix_seed({spec.seed, spec.n, spec.m, spec.planted_size, index}));
    const unsigned k = spec.planted_size != 0
                           ? spec.planted_size
                           : static_cast<unsigned>(
                                 rng.between(2, std::max(2u, spec.n / 2)));
    if (k > spec.m)
        return std::nullopt;
    const unsigned fillers = spec.n - k;
    if (fillers > 0 && spec.m < 3)
        return std::nullopt;

    // (a) planted partition: shuffle elements, cut at k-1 distinct points.
    std::vector<unsigned> elements(spec.m);
    for (unsigned e = 0; e < spec.m; ++e)
        elements[e] = e + 1;
    rng.shuffle(elements);
    std::vector<unsigned> cuts(spec.m - 1);
    for (unsigned c = 0; c < cuts.size(); ++c)
        cuts[c] = c + 1;
    rng.shuffle(cuts);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(spec.m);

    std::vector<std::vector<unsigned>> sets;
    unsigned begin = 0;
    for (unsigned end : cuts) {
        std::vector<unsigned> block(elements.begin() + begin, elements.begin() + end);
        std::sort(block.begin(), block.end());
        sets.push_back(std::move(block));
        begin = end;
    }

    // (b) fillers: distinct subsets of size [2, m-1]. Any nonempty subset
    // meets some planted block since the blocks partition the universe.
    std::vector<Mask> filler_bits;
    for (unsigned f = 0; f < fillers; ++f) {
        std::vector<unsigned> chosen;
        bool placed = false;
        for (int tries = 0; tries < 64 && !placed; ++tries) {
            const auto size = static_cast<unsigned>(rng.between(2, spec.m - 1));
            std::vector<unsigned> pool(spec.m);
            for (unsigned e = 0; e < spec.m; ++e)
                pool[e] = e + 1;
            rng.shuffle(pool);
            chosen.assign(pool.begin(), pool.begin() + size);
            std::sort(chosen.begin(), chosen.end());
            placed = std::find(sets.begin(), sets.end(), chosen) == sets.end();
        }
        if (!placed)
            return std::nullopt;
        filler_bits.push_back(bits_of(chosen));
        sets.push_back(std::move(chosen));
    }
    if (filler_bits.size() >= 2) {
        for (std::size_t i = 0; i < filler_bits.size(); ++i) {
            bool overlaps_other = false;
            for (std::size_t j = 0; j < filler_bits.size(); ++j)
                if (i != j && (filler_bits[i] & filler_bits[j]))
                    overlaps_other = true;
            if (!overlaps_other)
                return std::nullopt;
        }
    }

    // Shuffle set order; the first k entries were the planted blocks.
    std::vector<unsigned> order(spec.n);
    for (unsigned i = 0; i < spec.n; ++i)
        order[i] = i;
    rng.shuffle(order);
    std::vector<std::vector<unsigned>> shuffled(spec.n);
    Mask planted = 0;
    for (unsigned slot = 0; slot < spec.n; ++slot) {
        shuffled[slot] = sets[order[slot]];
        if (order[slot] < k)
            planted |= Mask{1} << slot;
    }

    // (c) acceptance.
    MecInstance instance(spec.m, std::move(shuffled));
    if (!conflict_graph(instance).connected())
        return std::nullopt;
    const auto report = solve(instance);
    if (!report.accepted() || *report.x_sol != planted)
        return std::nullopt;
    if (!verify_lambda_lemma(instance, default_lambdas(spec.n, spec.m)))
        return std::nullopt;
    return GeneratedInstance{std::move(instance), planted, index + 1};
}

} // namespace

GeneratedInstance generate_with_plant(const GenSpec &spec) {
    spec.validate();
    for (unsigned a = 0; a < spec.max_attempts; ++a)
        if (auto accepted = attempt(spec, a))
            return std::move(*accepted);
    throw GenerationError("no acceptable instance for n=" + std::to_string(spec.n) +
                          ", m=" + std::to_string(spec.m) + " within " +
                          std::to_string(spec.max_attempts) + " attempts");
}

GeneratedTailInstance generate_tail(const GenSpec &spec, double cost_max) {
    spec.validate();
    if (!(cost_max >= 0.0) || !std::isfinite(cost_max))
        throw DomainError("cost_max must be a nonnegative finite number");
    const auto cents = static_cast<std::uint64_t>(std::llround(cost_max * 100.0));
    for (unsigned a = 0; a < spec.max_attempts; ++a) {
        GenSpec sub = spec;
        sub.seed = mix_seed({spec.seed, 0x7a11, a});
        sub.max_attempts = 1;
        std::optional<GeneratedInstance> base;
        try {
            base = generate_with_plant(sub);
        } catch (const GenerationError &) {
            continue;
        }
        SplitMix64 rng(mix_seed({spec.seed, 0xc057, a}));
        std::vector<double> costs(spec.n);
        for (auto &c : costs)
            c = static_cast<double>(rng.between(0, cents)) / 100.0;
        TailInstance tail(spec.m, base->instance.sets(), std::move(costs));
        const auto report = solve_tail(tail, default_tail_lambdas(tail));
        if (report.x_sol && *report.x_sol == base->planted &&
            is_route_partition(tail, base->planted))
            return GeneratedTailInstance{std::move(tail), base->planted, a + 1};
    }
    throw GenerationError("no acceptable tail instance within " +
                          std::to_string(spec.max_attempts) + " attempts");
}

namespace {

struct ParsedFile {
    unsigned universe = 0;
    std::vector<std::vector<unsigned>> sets;
    std::vector<double> costs;
};

ParsedFile parse_lines(std::string_view text) {
    ParsedFile out;
    bool have_universe = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        std::istringstream in{std::string(raw)};
        std::string keyword;
        if (!(in >> keyword))
            continue;
        if (keyword == "universe") {
            if (have_universe)
                throw ParseError(line_no, "duplicate 'universe' directive");
            long long m = 0;
            std::string extra;
            if (!(in >> m) || (in >> extra))
                throw ParseError(line_no, "expected 'universe <m>'");
            if (m < 1 || m > kMaxUniverse)
                throw ParseError(line_no, "universe size must be in [1, 64]");
            out.universe = static_cast<unsigned>(m);
            have_universe = true;
        } else if (keyword == "set") {
            if (!have_universe)
                throw ParseError(line_no, "'set' before 'universe'");
            std::vector<unsigned> set;
            double cost = 0.0;
            std::string token;
            while (in >> token) {
                if (token == "cost") {
                    std::string value, extra;
                    if (!(in >> value) || (in >> extra))
                        throw ParseError(line_no, "expected 'cost <real>' at end of line");
                    const char *first = value.data();
                    const char *last = first + value.size();
                    auto [ptr, ec] = std::from_chars(first, last, cost);
                    if (ec != std::errc() || ptr != last)
                        throw ParseError(line_no, "bad cost '" + value + "'");
                    break;
                }
                unsigned long long e = 0;
                const char *first = token.data();
                const char *last = first + token.size();
                auto [ptr, ec] = std::from_chars(first, last, e);
                if (ec != std::errc() || ptr != last)
                    throw ParseError(line_no, "bad element '" + token + "'");
                if (e < 1 || e > out.universe)
                    throw ParseError(line_no, "element " + token + " outside 1.." +
                                                  std::to_string(out.universe));
                if (!set.empty() && e <= set.back())
                    throw ParseError(line_no, "elements must be strictly ascending");
                set.push_back(static_cast<unsigned>(e));
            }
            if (set.empty())
                throw ParseError(line_no, "set " + std::to_string(out.sets.size() + 1) +
                                              " is empty");
            out.sets.push_back(std::move(set));
            out.costs.push_back(cost);
        } else {
            throw ParseError(line_no, "unknown directive '" + keyword + "'");
        }
    }
    if (!have_universe)
        throw ParseError(line_no, "missing 'universe' directive");
    return out;
}

void append_set(std::string &out, const std::vector<unsigned> &set) {
    out += "set";
    for (unsigned e : set) {
        out += ' ';
        out += std::to_string(e);
    }
}

} // namespace

MecInstance parse_instance(std::string_view text) {
    auto parsed = parse_lines(text);
    return MecInstance(parsed.universe, std::move(parsed.sets));
}

TailInstance parse_tail_instance(std::string_view text) {
    auto parsed = parse_lines(text);
    return TailInstance(parsed.universe, std::move(parsed.sets), std::move(parsed.costs));
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string serialize_instance(const MecInstance &instance) {
    std::string out = "universe " + std::to_string(instance.universe_size()) + "\n";
    for (const auto &s : instance.sets()) {
        append_set(out, s);
        out += '\n';
    }
    return out;
}

std::string serialize_tail_instance(const TailInstance &instance) {
    std::string out = "universe " + std::to_string(instance.flight_count()) + "\n";
    for (unsigned r = 0; r < instance.num_routes(); ++r) {
        append_set(out, instance.routes()[r]);
        out += " cost ";
        out += format_double(instance.costs()[r]);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

MecInstance load_instance(const std::string &path) {
    return parse_instance(read_text_file(path));
}

TailInstance load_tail_instance(const std::string &path) {
    return parse_tail_instance(read_text_file(path));
}

} // namespace qaoaplus
