#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mlc/coloring.hpp"
#include "mlc/exchange.hpp"
#include "mlc/matroid.hpp"
#include "mlc/partition.hpp"
#include "mlc/uncross.hpp"

namespace mlc {

/// JSON forms. Malformed input raises ArgumentError (or ConstructionError
/// when the data is well-formed JSON but not a matroid).
///
///   subset      sorted array of element ids          [0, 2, 5]
///   matroid     {"kind": "uniform", "n": 4, "k": 2}
///               {"kind": "free", "n": 3}
///               {"kind": "graphic", "vertices": 4, "edges": [[0,1], ...]}
///               {"kind": "linear", "p": 2, "matrix": [[1,0,1], ...]}
///               {"kind": "partition", "n": 5, "blocks": [[0,1],[2,3,4]],
///                "capacities": [1, 2]}
///               {"kind": "restriction" | "dense-restriction",
///                "inner": {...}, "keep": [...]}
///               {"kind": "parallel-extension", "inner": {...}, "copies": [...]}
///   lists       {"universe": 3, "lists": [[1,2], [3], ...]}  (1-based colors)
///   sizes       array of list sizes                   [2, 1, 2]
///   coloring    array of colors, one per element      [1, 2, 1]
///   certificate {"set": [...], "deficiency": 2}

nlohmann::json subset_to_json(Subset s);
Subset subset_from_json(const nlohmann::json& j, int n);

nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

nlohmann::json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const nlohmann::json& j);

nlohmann::json sizes_to_json(const SizeFunction& sizes);
SizeFunction sizes_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const DeficiencyCertificate& cert);
nlohmann::json witness_to_json(const ExchangeWitness& w);
nlohmann::json report_to_json(const SufficiencyReport& r);
nlohmann::json trace_to_json(const UncrossTrace& t);

/// Parses the file at `path`; unreadable or syntactically invalid files
/// raise ArgumentError.
nlohmann::json load_json_file(const std::string& path);

}  // namespace mlc
