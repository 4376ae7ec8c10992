#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "radonsvm/svm.hpp"

namespace radonsvm {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the `y,x1,...,xn` format; y accepts -1, +1, or 1. Malformed rows
/// raise CsvError naming the offending line.
LabeledPointSet read_labeled_csv(std::istream& in);
LabeledPointSet read_labeled_csv_file(const std::string& path);

void write_labeled_csv(std::ostream& out, const LabeledPointSet& d);

}  // namespace radonsvm
