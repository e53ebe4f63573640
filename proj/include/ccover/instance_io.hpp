#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "ccover/frontends.hpp"

namespace ccover::io {

using Instance =
    std::variant<RectangleInstance, BoxInstance, ChordInstance, ExplicitInstance>;

/// Parse an instance object; schema violations raise InputError.
/// Formats ("v" is always 1):
///   {"v":1,"type":"rectangles","rects":[[x_lo,x_hi,y_lo,y_hi],...]}
///   {"v":1,"type":"boxes","dim":t,"boxes":[[l1,h1,...,lt,ht],...]}
///   {"v":1,"type":"chords","chords":[[a,b],...]}
///   {"v":1,"type":"explicit","n":n,"layers":[[[lo,hi],...],...],
///    "poset":[[u,v],...]|null,"g_edges":[[u,v],...]|null}
Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::filesystem::path& path);
nlohmann::json instance_to_json(const Instance& inst);

IntersectionModel build_model(const Instance& inst);
std::string instance_type(const Instance& inst);

nlohmann::json certificate_to_json(const CoverCertificate& cert,
                                   const VerifyReport* report);
CoverCertificate certificate_from_json(const nlohmann::json& j);

/// Deterministic instance generation: identical (type,n,seed,coord_max,dim)
/// produce identical instances, byte for byte once serialized.
Instance generate_instance(const std::string& type, int n, std::uint64_t seed,
                           std::int64_t coord_max, int dim = 3);

} // namespace ccover::io
