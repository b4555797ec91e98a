#ifndef FERMATKIT_LMFDB_HPP
#define FERMATKIT_LMFDB_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fermatkit/dataio.hpp"
#include "fermatkit/newform.hpp"

namespace fk {

// read-only client for the LMFDB Hilbert-newform API with an on-disk cache.
// Cache layout: <cache_root>/lmfdb/<field_label>/<level_norm>.json; each
// cache file records the schema version it was parsed with, the source URL,
// a content hash, and the normalized records themselves.
class LmfdbClient {
  public:
    struct Options {
        std::string base_url = "https://www.lmfdb.org";
        std::filesystem::path cache_root;  // empty: <FERMATKIT_CACHE> or data/cache
        bool offline = false;
        int max_attempts = 3;
        double min_request_interval_s = 1.0;
    };

    explicit LmfdbClient(Options opt);

    // cached-or-fetched newforms for a field at the given level norm
    std::vector<NewformRecord> fetch_newforms(const std::string& field_label,
                                              long level_norm);

    bool cache_has(const std::string& field_label, long level_norm) const;
    std::filesystem::path cache_path(const std::string& field_label,
                                     long level_norm) const;

    // normalized parse of an hmf_forms API payload (the subset of fields this
    // tool uses: label, hecke_polynomial, hecke_eigenvalues keyed by prime)
    static std::vector<NewformRecord> parse_api_payload(const json& payload,
                                                        const std::string& field_label,
                                                        long level_norm);

  private:
    json http_get_json(const std::string& path_and_query);
    Options opt_;
    double last_request_time_ = 0;
};

std::string sha256_hex(const std::string& bytes);

}  // namespace fk

#endif
