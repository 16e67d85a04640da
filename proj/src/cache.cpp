#include "ppalg/cache.hpp"

#include <filesystem>
#include <fstream>

#include "ppalg/errors.hpp"
#include "ppalg/json_io.hpp"

namespace ppalg {
namespace {

namespace fs = std::filesystem;

std::string snapshot_dump(const TruncatedQuotient& t) { return quotient_to_json(t).dump(); }

std::optional<TruncatedQuotient> try_load(const fs::path& file, const DoubleQuiver& dq,
                                          const Weight& lambda,
                                          const TruncatedQuotient::Options& opt) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
        if (doc.value("version", -1) != kCacheFormatVersion) return std::nullopt;
        const json& payload = doc.at("payload");
        if (fnv1a(payload.dump()) != std::stoull(doc.at("checksum").get<std::string>(), nullptr, 16))
            return std::nullopt;
        // A structurally valid entry under the wrong key is still a miss.
        if (payload.at("quiver") != json_of(dq.total()) ||
            payload.at("lambda") != json_of(dq.total(), lambda) ||
            payload.at("max_degree").get<int>() != opt.max_degree ||
            payload.at("reverse_arrow_order").get<bool>() != opt.reverse_arrow_order)
            return std::nullopt;
        return quotient_from_json(payload);
    } catch (...) {
        return std::nullopt; // corrupt entries are rebuilt, never trusted
    }
}

void store(const fs::path& file, const TruncatedQuotient& t) {
    json payload = quotient_to_json(t);
    json doc{{"version", kCacheFormatVersion},
             {"checksum", hex64(fnv1a(payload.dump()))},
             {"payload", std::move(payload)}};
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw io_error("cannot write cache entry " + tmp.string());
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp, file); // atomic replace on POSIX
}

} // namespace

std::string cache_key(const DoubleQuiver& dq, const Weight& lambda,
                      const TruncatedQuotient::Options& opt) {
    json key{{"version", kCacheFormatVersion},
             {"quiver", json_of(dq.total())},
             {"lambda", json_of(dq.total(), lambda)},
             {"max_degree", opt.max_degree},
             {"reverse_arrow_order", opt.reverse_arrow_order}};
    return hex64(fnv1a(key.dump()));
}

CacheOutcome cached_preprojective(const std::string& cache_dir, const DoubleQuiver& dq,
                                  const Weight& lambda, const TruncatedQuotient::Options& opt,
                                  bool verify) {
    CacheOutcome out;
    const fs::path dir(cache_dir);
    fs::create_directories(dir);
    const fs::path file = dir / (cache_key(dq, lambda, opt) + ".json");
    out.file = file.string();

    if (auto loaded = try_load(file, dq, lambda, opt)) {
        out.quotient = std::move(*loaded);
        out.hit = true;
        if (verify) {
            const TruncatedQuotient fresh = TruncatedQuotient::preprojective(dq, lambda, opt);
            if (snapshot_dump(out.quotient) != snapshot_dump(fresh))
                throw validation_error("cache entry disagrees with a fresh rebuild: " +
                                       out.file);
            out.verified = true;
        }
        return out;
    }

    out.quotient = TruncatedQuotient::preprojective(dq, lambda, opt);
    store(file, out.quotient);
    return out;
}

} // namespace ppalg
