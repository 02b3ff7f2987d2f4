#include "tpfc/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tpfc/errors.hpp"

namespace tpfc {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& field, const std::string& path, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(field, &consumed);
    while (consumed < field.size() && std::isspace(static_cast<unsigned char>(field[consumed]))) {
      ++consumed;
    }
    if (consumed != field.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw IoError(path + ": line " + std::to_string(line_no) + ": not a number: '" + field + "'");
  }
}

int parse_label(const std::string& field, const std::string& path, std::size_t line_no) {
  const double value = parse_double(field, path, line_no);
  const int label = static_cast<int>(value);
  if (static_cast<double>(label) != value || label < 0) {
    throw IoError(path + ": line " + std::to_string(line_no) +
                  ": labels must be small nonnegative integers");
  }
  return label;
}

bool looks_like_header(const std::string& line) {
  for (char ch : line) {
    if (std::isalpha(static_cast<unsigned char>(ch)) && ch != 'e' && ch != 'E') return true;
  }
  return false;
}

void zscore_features(Matrix& samples) {
  for (Eigen::Index k = 0; k < samples.cols(); ++k) {
    const double mean = samples.col(k).mean();
    samples.col(k).array() -= mean;
    const double variance = samples.col(k).squaredNorm() / static_cast<double>(samples.rows());
    if (variance > 0.0) samples.col(k) /= std::sqrt(variance);
  }
}

}  // namespace

void write_dataset_csv(const std::string& path, const DataMatrix& data) {
  data.validate();
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (Eigen::Index k = 0; k < data.feature_count(); ++k) {
    if (k > 0) out << ',';
    out << 'f' << (k + 1);
  }
  if (data.labels) out << ",label";
  out << '\n';
  for (Eigen::Index j = 0; j < data.sample_count(); ++j) {
    for (Eigen::Index k = 0; k < data.feature_count(); ++k) {
      if (k > 0) out << ',';
      out << format_double(data.samples(j, k));
    }
    if (data.labels) out << ',' << (*data.labels)[static_cast<std::size_t>(j)];
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

DataMatrix read_dataset_csv(const std::string& path, bool zscore) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  const auto header = split_fields(line);
  if (header.empty()) throw IoError(path + ": empty header");
  const bool has_label = header.back() == "label";
  const std::size_t feature_count = header.size() - (has_label ? 1 : 0);
  if (feature_count == 0) throw IoError(path + ": no feature columns");

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": expected " +
                    std::to_string(header.size()) + " fields, got " +
                    std::to_string(fields.size()));
    }
    std::vector<double> row(feature_count);
    for (std::size_t k = 0; k < feature_count; ++k) {
      row[k] = parse_double(fields[k], path, line_no);
    }
    rows.push_back(std::move(row));
    if (has_label) labels.push_back(parse_label(fields.back(), path, line_no));
  }
  if (rows.empty()) throw IoError(path + ": no data rows");

  Matrix samples(static_cast<Eigen::Index>(rows.size()),
                 static_cast<Eigen::Index>(feature_count));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t k = 0; k < feature_count; ++k) {
      samples(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = rows[j][k];
    }
  }
  if (zscore) zscore_features(samples);
  DataMatrix data{std::move(samples), std::nullopt};
  if (has_label) data.labels = std::move(labels);
  data.validate();
  return data;
}

void write_labels_csv(const std::string& path, const std::vector<int>& labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "label\n";
  for (int v : labels) out << v << '\n';
  if (!out) throw IoError("write failed: " + path);
}

std::vector<int> read_labels_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");

  std::size_t label_column = 0;
  std::size_t column_count = 1;
  std::vector<int> labels;
  std::size_t line_no = 1;
  if (looks_like_header(line)) {
    const auto header = split_fields(line);
    column_count = header.size();
    bool found = false;
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] == "label") {
        label_column = k;
        found = true;
      }
    }
    if (!found) throw IoError(path + ": no 'label' column in header");
  } else {
    const auto fields = split_fields(line);
    if (fields.size() != 1) {
      throw IoError(path + ": headerless label files must have one column");
    }
    labels.push_back(parse_label(fields[0], path, line_no));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != column_count) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": expected " +
                    std::to_string(column_count) + " fields");
    }
    labels.push_back(parse_label(fields[label_column], path, line_no));
  }
  if (labels.empty()) throw IoError(path + ": no labels");
  return labels;
}

}  // namespace tpfc
