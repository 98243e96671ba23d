#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fnls::cli {

enum class FieldType { number, integer, boolean, string, number_list, integer_list, object, object_list, extended_number };

const char* type_name(FieldType t);

// extended_number also accepts the strings "inf" and "infinity".
struct FieldSpec {
  std::string name;
  FieldType type;
  bool required = false;
  nlohmann::json fallback;  // null when there is no default
  std::string description;
};

struct KindSpec {
  std::string kind;
  std::string description;
  std::vector<FieldSpec> fields;
};

const std::vector<FieldSpec>& top_level_fields();
const std::vector<FieldSpec>& experiment_fields();
const std::vector<FieldSpec>& initial_data_fields();
const std::vector<FieldSpec>& gronwall_term_fields();
const std::vector<FieldSpec>& accumulation_fields();
const std::vector<KindSpec>& experiment_kinds();
const KindSpec* find_kind(const std::string& kind);

nlohmann::json schema_document();

}  // namespace fnls::cli
