#pragma once

#include <string>
#include <vector>

#include "tpfc/types.hpp"

namespace tpfc {

/// Write `f1,...,fd[,label]` with 17-significant-digit numbers.
void write_dataset_csv(const std::string& path, const DataMatrix& data);

/// Read a dataset CSV written by write_dataset_csv (label column optional).
/// With zscore set, features are standardized to zero mean and unit variance
/// (constant features are only centered).
DataMatrix read_dataset_csv(const std::string& path, bool zscore = false);

/// Single `label` column.
void write_labels_csv(const std::string& path, const std::vector<int>& labels);

/// Read labels from a single-column file (with or without a `label` header)
/// or from the `label` column of a dataset CSV.
std::vector<int> read_labels_csv(const std::string& path);

/// printf %.17g, the shortest format that round-trips doubles.
std::string format_double(double value);

}  // namespace tpfc
