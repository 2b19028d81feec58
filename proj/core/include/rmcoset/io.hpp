#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rmcoset/bounds.hpp"
#include "rmcoset/construct.hpp"
#include "rmcoset/gbf.hpp"
#include "rmcoset/search.hpp"
#include "rmcoset/seq.hpp"
#include "rmcoset/spectral.hpp"

namespace rmcoset {

using json = nlohmann::json;

// {"q": int, "m": int, "anf": {"<monomial index>": coeff, ...}} with decimal
// string keys; absent indices are zero coefficients.
json gbf_to_json(const Gbf& f);
Gbf gbf_from_json(const json& j);

json kernel_to_json(const KernelPair& k);
KernelPair kernel_from_json(const json& j);

json coset_rep_to_json(const CosetRep& rep);

// {"n", "L", "grid_max", "theta", "star_bound"?}
json pmepr_report_to_json(std::size_t n, const PmeprEstimate& est,
                          std::optional<double> star_bound = {});

// Coset rep JSON with the BoundReport fields merged in.
json verdict_to_json(const CosetRep& rep, const BoundReport& report);

json found_kernel_to_json(const FoundKernel& f);
json search_summary_to_json(const SearchConfig& cfg, const SearchResult& res);
json search_state_to_json(const SearchConfig& cfg, const SearchState& st);
SearchState search_state_from_json(const json& j, const SearchConfig& cfg);

// One line, comma separated: an integer t means xi^t (q required to parse),
// '.' means an unsupported zero, anything with 'j' or a decimal point is a
// complex literal re+imj.
std::string seq_to_text(const CxSeq& seq,
                        const std::optional<Modulus>& phase_hint = {});
CxSeq seq_from_text(const std::string& line,
                    const std::optional<Modulus>& mod = {});

uint64_t fnv1a(const std::string& s);

}  // namespace rmcoset
