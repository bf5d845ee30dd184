#include "twoarm/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "twoarm/errors.hpp"

namespace twoarm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_score(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line_no,
                     "score '" + field + "' is not a finite decimal number");
  }
  return value;
}

struct Row {
  std::size_t line_no;
  std::string subject;
  std::string label;
  double score;
};

}  // namespace

ExperimentDataset parse_dataset(std::istream& in, Design design) {
  const std::string expected_header = design == Design::between_subjects
                                          ? "subject,group,score"
                                          : "subject,treatment,score";
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(1, "empty input, expected header '" + expected_header + "'");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) {
    throw ParseError(line_no,
                     "header must be exactly '" + expected_header + "'");
  }

  std::vector<Row> rows;
  std::vector<std::string> labels;  // in first-seen order
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 fields, found " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(line_no, "empty subject identifier");
    if (fields[1].empty()) throw ParseError(line_no, "empty arm label");
    const double score = parse_score(fields[2], line_no);

    bool known = false;
    for (const auto& l : labels) known = known || l == fields[1];
    if (!known) {
      if (labels.size() == 2) {
        throw ParseError(line_no, "third arm label '" + fields[1] +
                                      "' found, expected exactly 2");
      }
      labels.push_back(fields[1]);
    }
    rows.push_back(Row{line_no, fields[0], fields[1], score});
  }
  if (labels.size() < 2) {
    throw ParseError(0, "expected exactly 2 arm labels, found " +
                            std::to_string(labels.size()));
  }

  ExperimentDataset d;
  d.design = design;
  d.control.label = labels[0];
  d.treatment.label = labels[1];

  if (design == Design::between_subjects) {
    for (const auto& r : rows) {
      if (r.label == labels[0]) {
        d.control.scores.push_back(r.score);
        d.control_subjects.push_back(r.subject);
      } else {
        d.treatment.scores.push_back(r.score);
        d.treatment_subjects.push_back(r.subject);
      }
    }
    return d;
  }

  // Within design: exactly one row per subject per arm, aligned by subject
  // in first-appearance order.
  struct PairSlot {
    std::size_t first_line = 0;
    bool has[2] = {false, false};
    double score[2] = {0.0, 0.0};
  };
  std::vector<std::string> order;
  std::map<std::string, PairSlot> pairs;
  for (const auto& r : rows) {
    auto [it, inserted] = pairs.try_emplace(r.subject);
    if (inserted) {
      it->second.first_line = r.line_no;
      order.push_back(r.subject);
    }
    const std::size_t arm = r.label == labels[0] ? 0 : 1;
    if (it->second.has[arm]) {
      throw ParseError(r.line_no, "subject '" + r.subject +
                                      "' has a duplicate '" + r.label +
                                       "' row");
    }
    it->second.has[arm] = true;
    it->second.score[arm] = r.score;
  }
  for (const auto& subject : order) {
    const PairSlot& slot = pairs.at(subject);
    for (std::size_t arm = 0; arm < 2; ++arm) {
      if (!slot.has[arm]) {
        throw ParseError(slot.first_line,
                         "subject '" + subject + "' is missing a '" +
                             labels[arm] + "' row");
      }
    }
    d.control.scores.push_back(slot.score[0]);
    d.treatment.scores.push_back(slot.score[1]);
    d.control_subjects.push_back(subject);
    d.treatment_subjects.push_back(subject);
  }
  return d;
}

ExperimentDataset parse_dataset_file(const std::string& path, Design design) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "'");
  }
  return parse_dataset(in, design);
}

void write_dataset_csv(const ExperimentDataset& d, std::ostream& out) {
  const bool between = d.design == Design::between_subjects;
  out << (between ? "subject,group,score" : "subject,treatment,score") << '\n';
  char buf[40];
  const auto emit = [&](const std::string& subject, const std::string& label,
                        double score) {
    std::snprintf(buf, sizeof(buf), "%.17g", score);
    out << subject << ',' << label << ',' << buf << '\n';
  };
  if (between) {
    for (std::size_t i = 0; i < d.control.scores.size(); ++i) {
      emit(d.control_subjects[i], d.control.label, d.control.scores[i]);
    }
    for (std::size_t i = 0; i < d.treatment.scores.size(); ++i) {
      emit(d.treatment_subjects[i], d.treatment.label, d.treatment.scores[i]);
    }
  } else {
    for (std::size_t i = 0; i < d.control.scores.size(); ++i) {
      emit(d.control_subjects[i], d.control.label, d.control.scores[i]);
      emit(d.treatment_subjects[i], d.treatment.label, d.treatment.scores[i]);
    }
  }
}

}  // namespace twoarm
