#include "tpfc/knowledge_io.hpp"

#include <fstream>

#include <json.hpp>

#include "tpfc/errors.hpp"

namespace tpfc {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, const char* name) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
    throw SchemaError(std::string("knowledge field '") + name + "' must be a 2-D array");
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows[0].size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
      throw SchemaError(std::string("knowledge field '") + name + "' has ragged rows");
    }
    for (Eigen::Index j = 0; j < c; ++j) {
      m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
    }
  }
  return m;
}

Vector vector_from_json(const json& values, const char* name) {
  if (!values.is_array()) {
    throw SchemaError(std::string("knowledge field '") + name + "' must be an array");
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = values[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

constexpr int kKnowledgeVersion = 1;

}  // namespace

std::string knowledge_to_json_text(const SourceKnowledge& knowledge) {
  json doc;
  doc["version"] = kKnowledgeVersion;
  doc["kind"] = to_string(kind_of(knowledge));
  if (const auto* centers = std::get_if<CenterSet>(&knowledge)) {
    doc["C"] = centers->cluster_count();
    doc["d"] = centers->feature_count();
    doc["centers"] = matrix_to_json(centers->centers);
  } else if (const auto* planes = std::get_if<PlaneSet>(&knowledge)) {
    doc["C"] = planes->cluster_count();
    doc["d"] = planes->feature_count();
    doc["directions"] = matrix_to_json(planes->directions);
    json biases = json::array();
    for (Eigen::Index i = 0; i < planes->biases.size(); ++i) biases.push_back(planes->biases(i));
    doc["biases"] = std::move(biases);
  } else {
    const auto& subspace = std::get<SubspacePrototypes>(knowledge);
    doc["C"] = subspace.centers.cluster_count();
    doc["d"] = subspace.centers.feature_count();
    doc["centers"] = matrix_to_json(subspace.centers.centers);
    doc["weights"] = matrix_to_json(subspace.weights.weights);
  }
  return doc.dump(2);
}

SourceKnowledge knowledge_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError(std::string("knowledge JSON parse error: ") + err.what());
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw SchemaError("knowledge JSON is missing field 'kind'");
  }
  const auto kind = doc["kind"].get<std::string>();
  SourceKnowledge knowledge;
  if (kind == "centers") {
    if (!doc.contains("centers")) throw SchemaError("centers knowledge missing field 'centers'");
    knowledge = CenterSet{matrix_from_json(doc["centers"], "centers")};
  } else if (kind == "planes") {
    if (!doc.contains("directions") || !doc.contains("biases")) {
      throw SchemaError("planes knowledge missing field 'directions' or 'biases'");
    }
    PlaneSet planes{matrix_from_json(doc["directions"], "directions"),
                    vector_from_json(doc["biases"], "biases")};
    planes.validate();
    knowledge = std::move(planes);
  } else if (kind == "subspace") {
    if (!doc.contains("centers") || !doc.contains("weights")) {
      throw SchemaError("subspace knowledge missing field 'centers' or 'weights'");
    }
    SubspacePrototypes subspace{CenterSet{matrix_from_json(doc["centers"], "centers")},
                                SubspaceWeightSet{matrix_from_json(doc["weights"], "weights")}};
    subspace.validate();
    knowledge = std::move(subspace);
  } else {
    throw SchemaError("unknown knowledge kind: '" + kind + "'");
  }
  if (doc.contains("C") && doc.contains("d")) {
    const auto c = doc["C"].get<Eigen::Index>();
    const auto d = doc["d"].get<Eigen::Index>();
    const auto check = [&](Eigen::Index rows, Eigen::Index cols) {
      if (rows != c || cols != d) {
        throw SchemaError("knowledge C/d fields disagree with array shapes");
      }
    };
    std::visit(
        [&](const auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, CenterSet>) {
            check(k.cluster_count(), k.feature_count());
          } else if constexpr (std::is_same_v<T, PlaneSet>) {
            check(k.cluster_count(), k.feature_count());
          } else {
            check(k.centers.cluster_count(), k.centers.feature_count());
          }
        },
        knowledge);
  }
  return knowledge;
}

void save_knowledge(const std::string& path, const SourceKnowledge& knowledge) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << knowledge_to_json_text(knowledge) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

SourceKnowledge load_knowledge(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return knowledge_from_json_text(text);
}

}  // namespace tpfc
