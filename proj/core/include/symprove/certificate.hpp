#pragma once

#include "symprove/prover.hpp"

#include <string>
#include <string_view>

namespace symprove {

inline constexpr std::string_view certificate_version = "1";

/// JSON document: version, system, options, stage1, stage2, verdict, note,
/// error, timings_ms, input_digest. Keys come out in a fixed order so equal
/// certificates render to equal bytes.
std::string render_certificate(const ProofCertificate& cert);

/// Inverse of render_certificate. Throws Error on malformed documents and on
/// any version other than "1".
ProofCertificate parse_certificate(std::string_view text);

} // namespace symprove
