#pragma once

// The non-linearity certificate pipeline: colouring -> set-pairing ->
// pair-closed core -> goodness (advisory) -> Posa Hamilton path -> bad-path
// certificate, plus the independent certificate checker.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linchrom/pairing.hpp"
#include "linchrom/posa.hpp"

namespace linchrom {

enum class FailureReason { none, empty_pairing, core_empty, no_hamilton_path };
std::string to_string(FailureReason r);

struct CertificateParams {
    int k = 0; // peeling threshold used
    RngSeed seed = 0;
    int sprinkle_total = 0;
    int sprinkle_consumed = 0;
    int sprinkle_accepted = 0;
};

struct BadPathCertificate {
    std::vector<int> path;  // simple path visiting each sub-pairing pair exactly twice
    SetPairing sub_pairing; // pair-closed subset of the original pairing
    CertificateParams params;
};

// Everything the pipeline learned, stage by stage; success iff certificate is
// present.
struct CertifyOutcome {
    std::optional<BadPathCertificate> certificate;
    FailureReason reason = FailureReason::none;
    SetPairing pairing; // stage 1
    SetPairing core;    // stage 2 (empty when peeling ate everything)
    int removed_pairs = 0;
    int k_used = 0;
    std::optional<GoodnessReport> goodness; // stage 3, advisory
};

// Plain-graph mode: the whole graph plays round one, no sprinkle. The default
// peeling threshold uses the graph's empirical edge density for p1.
CertifyOutcome certify_not_linear(const Graph& g, const Colouring& phi,
                                  std::optional<int> k_override, const PosaParams& posa);

// Two-round mode: peel and rotate on g1, sprinkle with the g2 edges inside
// the core; the certificate lives in g_union.
CertifyOutcome certify_not_linear(const TwoRoundSample& sample, const Colouring& phi,
                                  std::optional<int> k_override, const PosaParams& posa);

enum class CertificateViolation {
    none,
    path_not_simple,
    path_edge_missing,
    sub_pairing_invalid,
    original_pairing_invalid,
    sub_pairing_not_subset,
    path_set_mismatch,
    original_pair_split,
    colouring_length_mismatch,
    pair_colour_mismatch,
    centre_present,
};
std::string to_string(CertificateViolation v);

struct VerifyResult {
    bool ok = false;
    CertificateViolation violation = CertificateViolation::none;
};

// Independent checker (shares no code with the pipeline): path is simple in
// g, sub-pairing is a sub-set-pairing of `original`, the path covers exactly
// the sub-pairing, every original pair is fully on or fully off the path,
// and on the path every colour appears exactly on a pair (hence no centre).
VerifyResult verify_certificate(const Graph& g, const Colouring& phi,
                                const BadPathCertificate& cert, const SetPairing& original);

// single-line record consumed by the CLI `verify-cert` command
std::string serialize_certificate(const BadPathCertificate& cert);
BadPathCertificate parse_certificate(std::string_view line);

} // namespace linchrom
