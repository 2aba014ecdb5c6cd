#pragma once

#include <string>
#include <vector>

#include "gbs/hom.hpp"
#include "gbs/json_util.hpp"

namespace gbs {

// Images given as letter strings over the target presentation, one per
// source generator in presentation order.
HomCertificate hom_from_strings(const LabelledGraph& source, VertexId source_base, const LabelledGraph& target,
                                VertexId target_base, const std::vector<std::string>& images,
                                const std::string& provenance);

// Generator-image table as letter strings, witness node table, provenance.
Json certificate_to_json(const HomCertificate& c);
HomCertificate certificate_from_json(const Json& j);

// Human-readable listing of generator images and witnesses.
std::string certificate_to_text(const HomCertificate& c);

}  // namespace gbs
