#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icono/csv.hpp"
#include "icono/errors.hpp"
#include "icono/rng.hpp"

namespace icono {

enum class Character { Mary, Gabriel };
enum class Gender { Male, Female };

inline const char* to_string(Character c) {
  return c == Character::Mary ? "Mary" : "Gabriel";
}
inline const char* to_string(Gender g) {
  return g == Gender::Male ? "male" : "female";
}

inline std::optional<Character> parse_character(const std::string& s) {
  if (s == "Mary") return Character::Mary;
  if (s == "Gabriel") return Character::Gabriel;
  return std::nullopt;
}
inline std::optional<Gender> parse_gender(const std::string& s) {
  if (s == "male") return Gender::Male;
  if (s == "female") return Gender::Female;
  return std::nullopt;
}

// Pixel rectangle; (x, y) is the top-left corner.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool shape_valid() const { return w > 0 && h > 0 && x >= 0 && y >= 0; }
  bool inside(int image_w, int image_h) const {
    return shape_valid() && x + w <= image_w && y + h <= image_h;
  }
  bool contains(const BoundingBox& inner) const {
    return inner.x >= 0 && inner.y >= 0 && inner.x + inner.w <= w &&
           inner.y + inner.h <= h;
  }
};

inline bool operator==(const BoundingBox& a, const BoundingBox& b) {
  return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
}

// One character crop. Whole scenes may contribute several records; the crop
// is the unit every downstream stage consumes.
struct AnnotatedRecord {
  std::string image_id;
  std::string image_path;  // relative to the data root
  Character character = Character::Mary;
  BoundingBox body_box;
  std::optional<BoundingBox> face_box;
};

struct ContentRecord {
  std::string image_id;
  std::string image_path;
  Gender gender = Gender::Male;
};

struct SplitAssignment {
  std::set<std::string> train_ids;
  std::set<std::string> test_ids;
  uint64_t seed = 0;
};

inline const std::vector<std::string>& annotated_header() {
  static const std::vector<std::string> h = {
      "image_id", "image_path", "character", "body_x", "body_y", "body_w",
      "body_h",   "face_x",     "face_y",    "face_w", "face_h"};
  return h;
}

inline const std::vector<std::string>& content_header() {
  static const std::vector<std::string> h = {"image_id", "image_path", "gender"};
  return h;
}

namespace detail {

inline std::optional<int> parse_int_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void check_header(const std::vector<std::string>& got,
                         const std::vector<std::string>& want,
                         const std::string& path) {
  std::vector<RowIssue> issues;
  for (const auto& col : want) {
    if (std::find(got.begin(), got.end(), col) == got.end()) {
      issues.push_back({0, ErrorCode::MissingColumn, "missing column " + col});
    }
  }
  if (!issues.empty()) throw ManifestError(std::move(issues), path);
}

inline int column_index(const std::vector<std::string>& header,
                        const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  return static_cast<int>(it - header.begin());
}

}  // namespace detail

// Loads the annotated manifest. The whole file is scanned and every invariant
// violation is reported together; a single bad row never hides the rest.
// Box checks here are shape checks only (positive extent, non-negative
// origin); the in-image check needs pixels and happens at crop time or in
// verify_boxes_against_images.
inline std::vector<AnnotatedRecord> load_annotated_manifest(const std::string& path) {
  CsvFile csv = read_csv(path);
  detail::check_header(csv.header, annotated_header(), path);

  std::vector<int> idx;
  idx.reserve(annotated_header().size());
  for (const auto& col : annotated_header())
    idx.push_back(detail::column_index(csv.header, col));

  std::vector<AnnotatedRecord> records;
  std::vector<RowIssue> issues;
  std::set<std::string> seen_ids;
  int row_no = 0;
  for (const auto& row : csv.rows) {
    ++row_no;
    if (row.size() < csv.header.size()) {
      issues.push_back({row_no, ErrorCode::MissingColumn,
                        "expected " + std::to_string(csv.header.size()) +
                            " fields, got " + std::to_string(row.size())});
      continue;
    }
    AnnotatedRecord rec;
    rec.image_id = row[idx[0]];
    rec.image_path = row[idx[1]];
    if (!seen_ids.insert(rec.image_id).second) {
      issues.push_back({row_no, ErrorCode::BadLabel,
                        "duplicate image_id " + rec.image_id});
      continue;
    }
    auto ch = parse_character(row[idx[2]]);
    if (!ch) {
      issues.push_back({row_no, ErrorCode::BadLabel,
                        "character \"" + row[idx[2]] + "\" is not Mary or Gabriel"});
      continue;
    }
    rec.character = *ch;

    auto bx = detail::parse_int_field(row[idx[3]]);
    auto by = detail::parse_int_field(row[idx[4]]);
    auto bw = detail::parse_int_field(row[idx[5]]);
    auto bh = detail::parse_int_field(row[idx[6]]);
    if (!bx || !by || !bw || !bh) {
      issues.push_back({row_no, ErrorCode::BoxOutOfBounds, "body box is incomplete"});
      continue;
    }
    rec.body_box = {*bx, *by, *bw, *bh};
    if (!rec.body_box.shape_valid()) {
      issues.push_back({row_no, ErrorCode::BoxOutOfBounds,
                        "body box has non-positive extent or negative origin"});
      continue;
    }

    const std::string& fx = row[idx[7]];
    const std::string& fy = row[idx[8]];
    const std::string& fw = row[idx[9]];
    const std::string& fh = row[idx[10]];
    const bool any_face = !fx.empty() || !fy.empty() || !fw.empty() || !fh.empty();
    if (any_face) {
      auto px = detail::parse_int_field(fx);
      auto py = detail::parse_int_field(fy);
      auto pw = detail::parse_int_field(fw);
      auto ph = detail::parse_int_field(fh);
      if (!px || !py || !pw || !ph) {
        issues.push_back({row_no, ErrorCode::BoxOutOfBounds,
                          "face box is partially filled"});
        continue;
      }
      BoundingBox face{*px, *py, *pw, *ph};
      if (!face.shape_valid()) {
        issues.push_back({row_no, ErrorCode::BoxOutOfBounds,
                          "face box has non-positive extent or negative origin"});
        continue;
      }
      rec.face_box = face;
    }
    records.push_back(std::move(rec));
  }
  if (!issues.empty()) throw ManifestError(std::move(issues), path);
  return records;
}

inline std::vector<ContentRecord> load_content_manifest(const std::string& path) {
  CsvFile csv = read_csv(path);
  detail::check_header(csv.header, content_header(), path);
  const int id_i = detail::column_index(csv.header, "image_id");
  const int path_i = detail::column_index(csv.header, "image_path");
  const int gender_i = detail::column_index(csv.header, "gender");

  std::vector<ContentRecord> records;
  std::vector<RowIssue> issues;
  std::set<std::string> seen_ids;
  int row_no = 0;
  for (const auto& row : csv.rows) {
    ++row_no;
    if (row.size() < csv.header.size()) {
      issues.push_back({row_no, ErrorCode::MissingColumn,
                        "expected " + std::to_string(csv.header.size()) +
                            " fields, got " + std::to_string(row.size())});
      continue;
    }
    ContentRecord rec;
    rec.image_id = row[id_i];
    rec.image_path = row[path_i];
    if (!seen_ids.insert(rec.image_id).second) {
      issues.push_back({row_no, ErrorCode::BadLabel,
                        "duplicate image_id " + rec.image_id});
      continue;
    }
    auto g = parse_gender(row[gender_i]);
    if (!g) {
      issues.push_back({row_no, ErrorCode::BadLabel,
                        "gender \"" + row[gender_i] + "\" is not male or female"});
      continue;
    }
    rec.gender = *g;
    records.push_back(std::move(rec));
  }
  if (!issues.empty()) throw ManifestError(std::move(issues), path);
  return records;
}

inline void save_annotated_manifest(const std::string& path,
                                    const std::vector<AnnotatedRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    std::vector<std::string> row = {
        r.image_id,
        r.image_path,
        to_string(r.character),
        std::to_string(r.body_box.x),
        std::to_string(r.body_box.y),
        std::to_string(r.body_box.w),
        std::to_string(r.body_box.h)};
    if (r.face_box) {
      row.push_back(std::to_string(r.face_box->x));
      row.push_back(std::to_string(r.face_box->y));
      row.push_back(std::to_string(r.face_box->w));
      row.push_back(std::to_string(r.face_box->h));
    } else {
      row.insert(row.end(), {"", "", "", ""});
    }
    rows.push_back(std::move(row));
  }
  write_csv(path, annotated_header(), rows);
}

inline void save_content_manifest(const std::string& path,
                                  const std::vector<ContentRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records)
    rows.push_back({r.image_id, r.image_path, to_string(r.gender)});
  write_csv(path, content_header(), rows);
}

inline std::map<Character, int> class_histogram(
    const std::vector<AnnotatedRecord>& records) {
  std::map<Character, int> h;
  for (const auto& r : records) ++h[r.character];
  return h;
}

// Exact per-class test counts, sampled uniformly under the seed. The same
// records, count and seed always reproduce the same assignment.
inline SplitAssignment split_dataset(const std::vector<AnnotatedRecord>& records,
                                     int test_per_class, uint64_t seed) {
  if (test_per_class < 0)
    throw Error(ErrorCode::Precondition, "test_per_class must be >= 0");
  std::map<Character, std::vector<std::string>> by_class;
  for (const auto& r : records) by_class[r.character].push_back(r.image_id);
  for (auto ch : {Character::Mary, Character::Gabriel}) {
    const auto n = static_cast<int>(by_class[ch].size());
    if (n < test_per_class) {
      throw Error(ErrorCode::InsufficientClassCount,
                  std::string(to_string(ch)) + " has " + std::to_string(n) +
                      " records, need " + std::to_string(test_per_class));
    }
  }

  SplitAssignment split;
  split.seed = seed;
  for (auto& [ch, ids] : by_class) {
    Rng g(seed_for(seed, std::string("split/") + to_string(ch)));
    auto test = det_sample(ids, static_cast<size_t>(test_per_class), g);
    std::set<std::string> test_set(test.begin(), test.end());
    for (const auto& id : ids) {
      if (test_set.count(id))
        split.test_ids.insert(id);
      else
        split.train_ids.insert(id);
    }
  }
  return split;
}

inline void save_split(const std::string& path, const SplitAssignment& split) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& id : split.train_ids) rows.push_back({id, "train"});
  for (const auto& id : split.test_ids) rows.push_back({id, "test"});
  write_csv(path, {"image_id", "subset"}, rows);
}

inline SplitAssignment load_split(const std::string& path) {
  CsvFile csv = read_csv(path);
  detail::check_header(csv.header, {"image_id", "subset"}, path);
  SplitAssignment split;
  int row_no = 0;
  for (const auto& row : csv.rows) {
    ++row_no;
    if (row.size() < 2)
      throw Error(ErrorCode::MissingColumn,
                  path + " row " + std::to_string(row_no) + ": short row");
    if (row[1] == "train")
      split.train_ids.insert(row[0]);
    else if (row[1] == "test")
      split.test_ids.insert(row[0]);
    else
      throw Error(ErrorCode::BadLabel,
                  path + " row " + std::to_string(row_no) + ": subset " + row[1]);
  }
  return split;
}

}  // namespace icono
