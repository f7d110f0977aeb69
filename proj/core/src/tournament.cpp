#include "kingsim/tournament.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "kingsim/errors.hpp"

namespace kingsim {

Tournament::Tournament(int n) : n_(n), bits_(pair_count(n)) {
    if (n < 1) throw InvalidParameterError("Tournament: n must be >= 1");
}

std::size_t Tournament::pair_index(Vertex lo, Vertex hi) const {
    // Pairs (0,1),(0,2),...,(0,n-1),(1,2),... row-major over the lower index.
    auto l = static_cast<std::size_t>(lo);
    auto h = static_cast<std::size_t>(hi);
    auto n = static_cast<std::size_t>(n_);
    return l * (2 * n - l - 1) / 2 + (h - l - 1);
}

void Tournament::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidParameterError("Tournament: vertex out of range");
    if (u == v) throw InvalidParameterError("Tournament: self-pair");
}

bool Tournament::beats(Vertex u, Vertex v) const {
    check_pair(u, v);
    if (u < v) return bits_.test(pair_index(u, v));
    return !bits_.test(pair_index(v, u));
}

void Tournament::set_arc(Vertex u, Vertex v) {
    check_pair(u, v);
    if (u < v)
        bits_.set(pair_index(u, v));
    else
        bits_.reset(pair_index(v, u));
}

std::size_t Tournament::out_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && beats(v, u)) ++d;
    return d;
}

DynBitset Tournament::out_row(Vertex v) const {
    DynBitset row(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && beats(v, u)) row.set(static_cast<std::size_t>(u));
    return row;
}

Tournament generate_tournament(TournamentKind kind, int n, std::uint64_t seed) {
    if (n < 1) throw InvalidParameterError("generate_tournament: n must be >= 1");
    Tournament t(n);
    switch (kind) {
        case TournamentKind::Transitive:
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) t.set_arc(u, v);
            break;
        case TournamentKind::Rotational: {
            if (n % 2 == 0)
                throw InvalidParameterError("generate_tournament: rotational requires odd n");
            int half = (n - 1) / 2;
            for (Vertex u = 0; u < n; ++u)
                for (int k = 1; k <= half; ++k) t.set_arc(u, (u + k) % n);
            break;
        }
        case TournamentKind::UniformRandom: {
            std::mt19937_64 rng(seed);
            std::uint64_t word = 0;
            int left = 0;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    if (left == 0) { word = rng(); left = 64; }
                    if (word & 1)
                        t.set_arc(u, v);
                    else
                        t.set_arc(v, u);
                    word >>= 1;
                    --left;
                }
            }
            break;
        }
    }
    return t;
}

TournamentKind parse_tournament_kind(const std::string& name) {
    if (name == "random" || name == "uniform_random") return TournamentKind::UniformRandom;
    if (name == "transitive") return TournamentKind::Transitive;
    if (name == "rotational") return TournamentKind::Rotational;
    throw InvalidParameterError("unknown tournament kind: " + name);
}

std::string tournament_kind_name(TournamentKind kind) {
    switch (kind) {
        case TournamentKind::UniformRandom: return "random";
        case TournamentKind::Transitive: return "transitive";
        case TournamentKind::Rotational: return "rotational";
    }
    return "?";
}

void save_tournament(const Tournament& t, std::ostream& out) {
    out << "n=" << t.size() << "\n";
    for (Vertex u = 0; u < t.size(); ++u) {
        for (Vertex v = u + 1; v < t.size(); ++v) {
            if (t.beats(u, v))
                out << u << " " << v << "\n";
            else
                out << v << " " << u << "\n";
        }
    }
}

Tournament load_tournament(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
        throw IoError("tournament file: missing n= header");
    int n = std::stoi(header.substr(2));
    Tournament t(n);
    std::vector<bool> seen(Tournament::pair_count(n), false);
    std::size_t pairs = 0;
    Vertex u, v;
    while (in >> u >> v) {
        t.set_arc(u, v);
        Vertex lo = u < v ? u : v;
        Vertex hi = u < v ? v : u;
        auto l = static_cast<std::size_t>(lo);
        std::size_t idx = l * (2 * static_cast<std::size_t>(n) - l - 1) / 2 +
                          static_cast<std::size_t>(hi - lo) - 1;
        if (seen[idx]) throw IoError("tournament file: duplicate pair");
        seen[idx] = true;
        ++pairs;
    }
    if (pairs != Tournament::pair_count(n))
        throw IoError("tournament file: expected " + std::to_string(Tournament::pair_count(n)) +
                      " pairs, got " + std::to_string(pairs));
    return t;
}

void save_tournament_file(const Tournament& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    save_tournament(t, out);
    if (!out) throw IoError("write failed: " + path);
}

Tournament load_tournament_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return load_tournament(in);
}

}  // namespace kingsim
