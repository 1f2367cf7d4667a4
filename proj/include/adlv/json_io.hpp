// JSON encodings for elements, certificates, and verification reports, plus
// the text grammars shared with the CLI.  Object keys are emitted in sorted
// order, so serialization is byte-deterministic for a fixed input.

#pragma once

#include <string>

#include "json.hpp"

#include "adlv/affine.hpp"
#include "adlv/reduction.hpp"
#include "adlv/report.hpp"

namespace adlv {

nlohmann::json to_json(const FiniteElement& w);
nlohmann::json to_json(const AffineElement& x);  // {"lambda": [...], "word": [...]}
nlohmann::json to_json(const ReductionCertificate& cert);
nlohmann::json to_json(const VerificationReport& report);

AffineElement affine_from_json(const std::shared_ptr<const Group>& group,
                               const nlohmann::json& j);
ReductionCertificate certificate_from_json(const nlohmann::json& j);

// Grammars: generator words as "4321234" or "4 3 2 1 2 3 4"; one-line
// permutations "[5,2,3,4,1]" (type A); cocharacters "2,1,0,-1,-2"; affine
// elements "t[2,1,0,-1,-2] * w[4321234]".
Word parse_word(const std::string& text);
FiniteElement parse_finite(const std::string& text, const CoxeterSystem& W);
Cocharacter parse_cocharacter(const std::string& text);
AffineElement parse_affine(const std::string& text, const std::shared_ptr<const Group>& group);

}  // namespace adlv
