#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "fermatkit/lmfdb.hpp"

#include <openssl/sha.h>

#include <chrono>
#include <fstream>
#include <thread>

#include <httplib.h>

namespace fk {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * SHA256_DIGEST_LENGTH);
    for (unsigned char b : digest) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 15]);
    }
    return out;
}

LmfdbClient::LmfdbClient(Options opt) : opt_(std::move(opt)) {
    if (opt_.cache_root.empty()) {
        if (const char* env = std::getenv("FERMATKIT_CACHE"))
            opt_.cache_root = env;
        else
            opt_.cache_root = std::filesystem::path("data") / "cache";
    }
}

std::filesystem::path LmfdbClient::cache_path(const std::string& field_label,
                                              long level_norm) const {
    return opt_.cache_root / "lmfdb" / field_label /
           (std::to_string(level_norm) + ".json");
}

bool LmfdbClient::cache_has(const std::string& field_label, long level_norm) const {
    return std::filesystem::exists(cache_path(field_label, level_norm));
}

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) fail_internal("cache write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

json LmfdbClient::http_get_json(const std::string& path_and_query) {
    double since = now_s() - last_request_time_;
    if (since < opt_.min_request_interval_s)
        std::this_thread::sleep_for(std::chrono::duration<double>(
            opt_.min_request_interval_s - since));

    std::string err;
    for (int attempt = 0; attempt < opt_.max_attempts; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(
                std::chrono::duration<double>(0.5 * (1 << attempt)));
        last_request_time_ = now_s();
        httplib::Client cli(opt_.base_url);
        cli.set_connection_timeout(10);
        cli.set_read_timeout(30);
        cli.set_follow_location(true);
        auto res = cli.Get(path_and_query);
        if (!res) {
            err = "connection failure (" + httplib::to_string(res.error()) + ")";
            continue;
        }
        if (res->status != 200) {
            err = "HTTP status " + std::to_string(res->status);
            continue;
        }
        try {
            return json::parse(res->body);
        } catch (const json::exception& e) {
            std::string excerpt = res->body.substr(0, 160);
            fail_input("unparseable response from " + path_and_query + ": " + e.what() +
                       "; payload starts: " + excerpt);
        }
    }
    fail_data("LMFDB request failed after " + std::to_string(opt_.max_attempts) +
              " attempts: " + err);
}

std::vector<NewformRecord> LmfdbClient::parse_api_payload(
    const json& payload, const std::string& field_label, long level_norm) {
    if (!payload.contains("data") || !payload.at("data").is_array())
        fail_input("hmf_forms payload has no data array; payload starts: " +
                   payload.dump().substr(0, 160));
    json fixture;
    fixture["field_label"] = field_label;
    fixture["level_norm"] = level_norm;
    json forms = json::array();
    for (const auto& item : payload.at("data")) {
        json rec;
        try {
            rec["label"] = item.at("label").get<std::string>();
            if (item.contains("hecke_polynomial"))
                rec["hecke_poly"] = item.at("hecke_polynomial");
            else if (item.contains("hecke_degree"))
                rec["hecke_degree"] = item.at("hecke_degree").get<int>();
            else
                rec["hecke_poly"] = json::array({0, 1});
            if (item.contains("orbit_size"))
                rec["orbit_size"] = item.at("orbit_size").get<int>();
            json evs = json::array();
            if (item.contains("hecke_eigenvalues"))
                for (const auto& ev : item.at("hecke_eigenvalues")) {
                    json je;
                    je["p"] = ev.at("p");
                    je["f"] = ev.value("f", 1);
                    je["factor_index"] = ev.value("factor_index", 0);
                    je["aq"] = ev.at("aq");
                    evs.push_back(je);
                }
            rec["eigenvalues"] = evs;
        } catch (const json::exception& e) {
            fail_input(std::string("hmf_forms schema drift: ") + e.what() +
                       "; record starts: " + item.dump().substr(0, 160));
        }
        forms.push_back(rec);
    }
    fixture["forms"] = forms;
    return parse_newform_table(fixture);
}

std::vector<NewformRecord> LmfdbClient::fetch_newforms(const std::string& field_label,
                                                       long level_norm) {
    auto path = cache_path(field_label, level_norm);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::string raw((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
        json doc;
        try {
            doc = json::parse(raw);
        } catch (const json::exception& e) {
            fail_internal("corrupt cache file " + path.string() + ": " + e.what());
        }
        std::string body = doc.at("payload").dump();
        if (sha256_hex(body) != doc.at("sha256").get<std::string>())
            fail_internal("cache hash mismatch for " + path.string() +
                          " (corruption detected)");
        return parse_newform_table(doc.at("payload"));
    }
    if (opt_.offline)
        fail_data("offline mode and no cached newforms for " + field_label +
                  " at level norm " + std::to_string(level_norm));

    std::string query = "/api/hmf_forms/?_format=json&field_label=" + field_label +
                        "&level_norm=" + std::to_string(level_norm);
    json payload = http_get_json(query);
    auto records = parse_api_payload(payload, field_label, level_norm);

    json normalized = serialize_newform_table(field_label, records);
    json cachedoc;
    cachedoc["schema_version"] = "lmfdb-hmf-1";
    cachedoc["source_url"] = opt_.base_url + query;
    cachedoc["fetched_at"] = static_cast<long>(std::time(nullptr));
    cachedoc["payload"] = normalized;
    cachedoc["sha256"] = sha256_hex(normalized.dump());
    atomic_write(path, cachedoc.dump(1));

    // the cache must re-parse to exactly what was stored
    auto reread = fetch_newforms(field_label, level_norm);
    if (serialize_newform_table(field_label, reread) != normalized)
        fail_internal("cache round-trip mismatch for " + field_label);
    return records;
}

}  // namespace fk
