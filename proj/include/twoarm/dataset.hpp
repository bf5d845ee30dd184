#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twoarm/descriptives.hpp"

namespace twoarm {

enum class Design { between_subjects, within_subjects };

/// Two-arm experiment data. Arms keep their input labels; `control` holds
/// whichever label appeared first in the source, analyze() reassigns roles.
/// For within-subjects data the subject vectors are identical and the two
/// score vectors are aligned by subject.
struct ExperimentDataset {
  Design design = Design::between_subjects;
  GroupSample control;
  GroupSample treatment;
  std::vector<std::string> control_subjects;
  std::vector<std::string> treatment_subjects;
};

/// Parse CSV with header `subject,group,score` (between) or
/// `subject,treatment,score` (within). Exactly two distinct labels; within
/// designs need exactly one row per subject per arm. Throws ParseError with
/// a 1-based line number.
ExperimentDataset parse_dataset(std::istream& in, Design design);

/// File convenience wrapper; throws ParseError if the file cannot be read.
ExperimentDataset parse_dataset_file(const std::string& path, Design design);

/// Write the dataset back out in the same CSV dialect parse_dataset reads.
void write_dataset_csv(const ExperimentDataset& d, std::ostream& out);

}  // namespace twoarm
