#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qdtough/certifier.hpp"
#include "qdtough/extremal.hpp"
#include "qdtough/lemmas.hpp"
#include "qdtough/spectral.hpp"
#include "qdtough/toughness.hpp"

namespace qdtough::report {

using nlohmann::json;

/// Rounds to 12 significant digits so documents print that precision.
double round12(double value);

json spectra_document(const SpectralSummary& summary);
json toughness_document(const ToughnessReport& report, std::size_t n);
json t_tough_document(const TToughResult& result, const Rational& t, ToughnessVariant variant);
json certificate_document(const CertOutcome& outcome);
json extremal_document(const ExtremalSpec& spec, const std::string& emitted_format,
                       const std::string& encoded);
json comparison_document(const ComparisonRecord& record);
json sweep_document(const SweepReport& report);
json lemmas_document(const std::vector<LemmaCheck>& checks, std::uint64_t seed);

/// Tab-separated table, one row per sweep instance.
std::string sweep_table(const SweepReport& report);

/// Two-space indented JSON with a trailing newline.
std::string dump(const json& document);

}  // namespace qdtough::report
