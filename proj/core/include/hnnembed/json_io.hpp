#pragma once

// JSON reports. Objects use sorted keys and hold no floating point values;
// ratios are {"num", "den"} pairs. Words are written in the text syntax of
// syntax.hpp.

#include <nlohmann/json.hpp>

#include "hnnembed/certificate.hpp"
#include "hnnembed/dehn.hpp"
#include "hnnembed/hnn_embed.hpp"
#include "hnnembed/presentation.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/subquotient.hpp"

namespace hnnembed {

using Json = nlohmann::json;

Json ratio_json(const Ratio& r);
Json presentation_json(const Presentation& p);
Json pieces_json(const Presentation& p, const PieceReport& report);
Json cp_json(const Presentation& p, const CpResult& r, std::size_t pbound);
Json cprime_json(const Presentation& p, const CprimeResult& r, const Ratio& lambda);
Json quotient_json(const Presentation& parent, const QuotientPresentation& q);
Json no_extra_powers_json(const Presentation& parent, const NoExtraPowersResult& r);
Json no_duplicates_json(const Presentation& parent, const NoDuplicatesResult& r);
Json graph_json(const CoreGraph& g, const Alphabet& alphabet);
Json certificate_json(const EmbeddingCertificate& cert, const PartialAscHNN& g);
Json dehn_json(const Presentation& p, const DehnResult& r);
Json area_json(const Presentation& p, const AreaReport& r);

// The inputs certify needs besides (H, G): the construction and, for the
// irreducible one, the chosen labels and digram words. Throws Error on a
// malformed document.
Construction construction_from_json(const Json& cert);
std::optional<IrreducibleInputs> irreducible_inputs_from_json(const Json& cert, const Alphabet& g);

}  // namespace hnnembed
