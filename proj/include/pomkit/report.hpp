#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pomkit/actions.hpp"
#include "pomkit/constructions.hpp"
#include "pomkit/document.hpp"
#include "pomkit/pom.hpp"

namespace pomkit {

using json = nlohmann::ordered_json;

// Machine-format building blocks. The schema is documented in
// docs/machine_format.md; keys are emitted in a fixed order so that output
// is byte-stable across runs.
json preorder_json(const Preorder& order);
json monoid_json(const FiniteMonoid& m);

json classification_json(const std::string& object, const ClassificationReport& report);
json cosets_json(const std::string& object, const std::vector<int>& submonoid,
                 const std::vector<CosetRow>& rows);
json normality_json(const std::string& object, const std::vector<int>& submonoid,
                    const NormalityReport& report);
json coreflect_json(const std::string& object, const CoreflectionResult& result);
json fragment_json(const std::string& object, const FreeFragment& fragment);
json s1s2_json(const S1S2Report& report);
json consequences_json(const ConsequencesReport& report);
json action_axioms_json(const ActionAxiomReport& report);
json roundtrip_hg_json(const RoundTripHGReport& report);
json roundtrip_gh_json(const RoundTripGHReport& report);
json zz_json(const ZzDemoReport& report);

// Human renderings; coset tables match the three-column layout used for
// worked examples.
void render_preorder(std::ostream& out, const Preorder& order);
void render_classification(std::ostream& out, const std::string& object,
                           const ClassificationReport& report);
void render_cosets(std::ostream& out, const std::string& object,
                   const std::vector<CosetRow>& rows);
void render_zz(std::ostream& out, const ZzDemoReport& report);

std::string set_to_string(const std::vector<int>& elements);

}  // namespace pomkit
