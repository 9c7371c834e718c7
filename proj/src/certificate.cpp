#include "linchrom/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

#include "linchrom/rng.hpp"

namespace linchrom {

std::string to_string(FailureReason r) {
    switch (r) {
        case FailureReason::none: return "None";
        case FailureReason::empty_pairing: return "EmptyPairing";
        case FailureReason::core_empty: return "CoreEmpty";
        case FailureReason::no_hamilton_path: return "NoHamiltonPath";
    }
    return "?";
}

std::string to_string(CertificateViolation v) {
    switch (v) {
        case CertificateViolation::none: return "ok";
        case CertificateViolation::path_not_simple: return "path_not_simple";
        case CertificateViolation::path_edge_missing: return "path_edge_missing";
        case CertificateViolation::sub_pairing_invalid: return "sub_pairing_invalid";
        case CertificateViolation::original_pairing_invalid: return "original_pairing_invalid";
        case CertificateViolation::sub_pairing_not_subset: return "sub_pairing_not_subset";
        case CertificateViolation::path_set_mismatch: return "path_set_mismatch";
        case CertificateViolation::original_pair_split: return "original_pair_split";
        case CertificateViolation::colouring_length_mismatch: return "colouring_length_mismatch";
        case CertificateViolation::pair_colour_mismatch: return "pair_colour_mismatch";
        case CertificateViolation::centre_present: return "centre_present";
    }
    return "?";
}

namespace {

CertifyOutcome run_pipeline(const Graph& first_round, const Graph& host, const Graph* second_round,
                            double p1, const Colouring& phi, std::optional<int> k_override,
                            const PosaParams& posa) {
    if (static_cast<int>(phi.size()) != host.vertex_count())
        throw ParameterError("colouring length does not match vertex count");

    CertifyOutcome out;
    out.pairing = build_set_pairing(phi);
    if (out.pairing.s.empty()) {
        out.reason = FailureReason::empty_pairing;
        return out;
    }

    int k = k_override
                ? *k_override
                : std::max(1, static_cast<int>(std::ceil(
                                  static_cast<double>(out.pairing.s.size()) * p1 / 3.0)));
    out.k_used = k;
    PeelResult peel = peel_core(first_round, out.pairing, k);
    out.core = peel.core;
    out.removed_pairs = peel.removed_pairs;
    if (out.core.s.empty()) {
        out.reason = FailureReason::core_empty;
        return out;
    }

    // advisory goodness report; the pipeline proceeds regardless
    const int core_n = static_cast<int>(out.core.s.size());
    const Fraction fraction{1, 45};
    ExpansionMode mode = (fraction.floor_mul(core_n) <= 3 && core_n <= 150) || core_n <= 20
                             ? ExpansionMode::exact
                             : ExpansionMode::sampled;
    out.goodness = is_good(first_round, out.core.s, fraction, mode, 64,
                           derive_stream_seed(posa.seed, 0xb00ULL));

    // sprinkle: second-round edges inside the core, exposed in seeded random
    // order
    std::vector<Edge> sprinkle;
    if (second_round) {
        std::vector<char> in_core(static_cast<std::size_t>(host.vertex_count()), 0);
        for (int v : out.core.s) in_core[static_cast<std::size_t>(v)] = 1;
        for (int v : out.core.s)
            for (int u : second_round->neighbours(v))
                if (u > v && in_core[static_cast<std::size_t>(u)]) sprinkle.emplace_back(v, u);
        SplitMix64 rng(derive_stream_seed(posa.seed, 0x5e1ULL));
        rng.shuffle(sprinkle);
    }

    PosaStats stats;
    std::optional<PathWitness> path = posa_hamilton_path(first_round, out.core.s, sprinkle, posa, &stats);
    if (!path) {
        out.reason = FailureReason::no_hamilton_path;
        return out;
    }

    BadPathCertificate cert;
    cert.path = path->vertices;
    cert.sub_pairing = out.core;
    cert.params.k = k;
    cert.params.seed = posa.seed;
    cert.params.sprinkle_total = static_cast<int>(sprinkle.size());
    cert.params.sprinkle_consumed = stats.sprinkle_consumed;
    cert.params.sprinkle_accepted = stats.sprinkle_accepted;

    VerifyResult check = verify_certificate(host, phi, cert, out.pairing);
    if (!check.ok)
        throw ContractError("pipeline produced a certificate that fails verification: " +
                            to_string(check.violation));
    out.certificate = std::move(cert);
    return out;
}

} // namespace

CertifyOutcome certify_not_linear(const Graph& g, const Colouring& phi,
                                  std::optional<int> k_override, const PosaParams& posa) {
    return run_pipeline(g, g, nullptr, g.density(), phi, k_override, posa);
}

CertifyOutcome certify_not_linear(const TwoRoundSample& sample, const Colouring& phi,
                                  std::optional<int> k_override, const PosaParams& posa) {
    return run_pipeline(sample.g1, sample.g_union, &sample.g2, sample.p1, phi, k_override, posa);
}

// ---------------------------------------------------------------------------
// independent verification

namespace {

bool pairing_well_formed(const std::vector<int>& s, const std::vector<std::pair<int, int>>& pairs,
                         int n) {
    if (s.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    if (pairs.size() * 2 != s.size()) return false;
    std::vector<int> covered;
    for (auto [a, b] : pairs) {
        if (a >= b) return false;
        covered.push_back(a);
        covered.push_back(b);
    }
    std::sort(covered.begin(), covered.end());
    return covered == s;
}

} // namespace

VerifyResult verify_certificate(const Graph& g, const Colouring& phi,
                                const BadPathCertificate& cert, const SetPairing& original) {
    auto fail = [](CertificateViolation v) { return VerifyResult{false, v}; };
    const int n = g.vertex_count();

    // simple path in the host graph
    if (cert.path.empty()) return fail(CertificateViolation::path_not_simple);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cert.path) {
        if (v < 0 || v >= n) return fail(CertificateViolation::path_not_simple);
        if (seen[static_cast<std::size_t>(v)]) return fail(CertificateViolation::path_not_simple);
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < cert.path.size(); ++i)
        if (!g.has_edge(cert.path[i], cert.path[i + 1]))
            return fail(CertificateViolation::path_edge_missing);

    // both pairings well formed, and sub-pairing contained in the original
    if (!pairing_well_formed(cert.sub_pairing.s, cert.sub_pairing.pairs, n))
        return fail(CertificateViolation::sub_pairing_invalid);
    if (!pairing_well_formed(original.s, original.pairs, n))
        return fail(CertificateViolation::original_pairing_invalid);
    std::set<std::pair<int, int>> original_pairs(original.pairs.begin(), original.pairs.end());
    for (auto pr : cert.sub_pairing.pairs)
        if (!original_pairs.count(pr)) return fail(CertificateViolation::sub_pairing_not_subset);

    // the path visits exactly the sub-pairing's set
    std::vector<int> path_sorted(cert.path);
    std::sort(path_sorted.begin(), path_sorted.end());
    if (path_sorted != cert.sub_pairing.s) return fail(CertificateViolation::path_set_mismatch);

    // every original pair fully on or fully off the path
    for (auto [a, b] : original.pairs)
        if (seen[static_cast<std::size_t>(a)] != seen[static_cast<std::size_t>(b)])
            return fail(CertificateViolation::original_pair_split);

    // colour structure on the path: every pair is monochromatic, so each
    // vertex shares its colour with its partner; with the path set equal to
    // the union of the pairs, every colour count is even and no colour is
    // unique (no centre). Both halves are checked explicitly.
    if (static_cast<int>(phi.size()) != n) return fail(CertificateViolation::colouring_length_mismatch);
    std::unordered_map<int, int> colour_count;
    for (int v : cert.path) ++colour_count[phi[static_cast<std::size_t>(v)]];
    for (auto [a, b] : cert.sub_pairing.pairs)
        if (phi[static_cast<std::size_t>(a)] != phi[static_cast<std::size_t>(b)])
            return fail(CertificateViolation::pair_colour_mismatch);
    for (auto& [colour, count] : colour_count)
        if (count == 1) return fail(CertificateViolation::centre_present);

    return VerifyResult{true, CertificateViolation::none};
}

// ---------------------------------------------------------------------------
// one-line serialisation

namespace {

constexpr const char* kCertTag = "LCCERT1";

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

long long parse_ll(std::string_view tok, std::size_t offset) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("invalid integer in certificate", offset);
    return value;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t offset) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("invalid integer in certificate", offset);
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

} // namespace

std::string serialize_certificate(const BadPathCertificate& cert) {
    std::string out = kCertTag;
    out += " path=" + join_ints(cert.path, ',');
    out += " pairs=";
    for (std::size_t i = 0; i < cert.sub_pairing.pairs.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(cert.sub_pairing.pairs[i].first) + "-" +
               std::to_string(cert.sub_pairing.pairs[i].second);
    }
    out += " k=" + std::to_string(cert.params.k);
    out += " seed=" + std::to_string(cert.params.seed);
    out += " sprinkle=" + std::to_string(cert.params.sprinkle_total) + "/" +
           std::to_string(cert.params.sprinkle_consumed) + "/" +
           std::to_string(cert.params.sprinkle_accepted);
    return out;
}

BadPathCertificate parse_certificate(std::string_view line) {
    std::vector<std::string_view> tokens = split(line, ' ');
    if (tokens.size() != 6 || tokens[0] != kCertTag)
        throw ParseError("expected 'LCCERT1 path=... pairs=... k=... seed=... sprinkle=a/b/c'", 0);

    auto value_of = [&](std::size_t idx, std::string_view key) -> std::string_view {
        std::string_view tok = tokens[idx];
        if (tok.substr(0, key.size()) != key)
            throw ParseError("expected field '" + std::string(key) + "'",
                             static_cast<std::size_t>(tok.data() - line.data()));
        return tok.substr(key.size());
    };
    auto offset_of = [&](std::string_view tok) {
        return static_cast<std::size_t>(tok.data() - line.data());
    };

    BadPathCertificate cert;
    std::string_view path_val = value_of(1, "path=");
    if (!path_val.empty())
        for (std::string_view tok : split(path_val, ','))
            cert.path.push_back(static_cast<int>(parse_ll(tok, offset_of(tok))));

    std::string_view pairs_val = value_of(2, "pairs=");
    if (!pairs_val.empty())
        for (std::string_view tok : split(pairs_val, ',')) {
            std::size_t dash = tok.find('-');
            if (dash == std::string_view::npos)
                throw ParseError("pair must look like a-b", offset_of(tok));
            int a = static_cast<int>(parse_ll(tok.substr(0, dash), offset_of(tok)));
            int b = static_cast<int>(parse_ll(tok.substr(dash + 1), offset_of(tok) + dash + 1));
            cert.sub_pairing.pairs.emplace_back(a, b);
        }
    for (auto [a, b] : cert.sub_pairing.pairs) {
        cert.sub_pairing.s.push_back(a);
        cert.sub_pairing.s.push_back(b);
    }
    std::sort(cert.sub_pairing.s.begin(), cert.sub_pairing.s.end());

    cert.params.k = static_cast<int>(parse_ll(value_of(3, "k="), offset_of(tokens[3])));
    cert.params.seed = parse_u64(value_of(4, "seed="), offset_of(tokens[4]));
    std::string_view spr = value_of(5, "sprinkle=");
    std::vector<std::string_view> parts = split(spr, '/');
    if (parts.size() != 3) throw ParseError("sprinkle must look like total/consumed/accepted",
                                            offset_of(tokens[5]));
    cert.params.sprinkle_total = static_cast<int>(parse_ll(parts[0], offset_of(parts[0])));
    cert.params.sprinkle_consumed = static_cast<int>(parse_ll(parts[1], offset_of(parts[1])));
    cert.params.sprinkle_accepted = static_cast<int>(parse_ll(parts[2], offset_of(parts[2])));
    return cert;
}

} // namespace linchrom
