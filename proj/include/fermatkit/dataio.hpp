#ifndef FERMATKIT_DATAIO_HPP
#define FERMATKIT_DATAIO_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermatkit/frey.hpp"
#include "fermatkit/newform.hpp"
#include "fermatkit/number_field.hpp"
#include "fermatkit/units.hpp"

namespace fk {

using json = nlohmann::json;

// field descriptor wire format (exact rationals as "n" / "n/d" strings)
NumberFieldData parse_field_descriptor(const json& doc);
json serialize_field_descriptor(const NumberFieldData& data);

std::vector<NewformRecord> parse_newform_table(const json& doc);
json serialize_newform_table(const std::string& field_label,
                             const std::vector<NewformRecord>& forms);

// bundled fixtures: <root>/fields/<label>.json, <root>/newforms/<label>.json
class FixtureStore {
  public:
    explicit FixtureStore(std::filesystem::path root);
    static std::filesystem::path default_root();

    const std::filesystem::path& root() const { return root_; }
    std::shared_ptr<const NumberField> load_field(const std::string& label);
    std::vector<NewformRecord> newforms(const std::string& label);
    bool has_newform_table(const std::string& label) const;
    std::vector<std::string> field_labels() const;

  private:
    std::filesystem::path root_;
    std::map<std::string, std::shared_ptr<const NumberField>> cache_;
};

// report serialization -------------------------------------------------------

json to_json(const FieldElement& x);
json to_json(const RkCertificate& cert);
json to_json(const SignMapReport& rep);
json to_json(const RayClassReport& rep);
json to_json(const Theorem17Verdict& v);
json to_json(const ConditionCReport& rep);
json to_json(const ObstructionReport& rep);
json to_json(const SurvivorReport& rep);
json to_json(const FsWitness& w);
json to_json(const NormalizedSolution& n);
json to_json(const ValuationChainReport& rep);
json to_json(const PowerResiduePairs& pr);
json to_json(const std::vector<PrimeIdealData>& qs);

}  // namespace fk

#endif
