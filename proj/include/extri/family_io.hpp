#ifndef EXTRI_FAMILY_IO_HPP
#define EXTRI_FAMILY_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "extri/core.hpp"

namespace extri {

/*
 * Text format:
 *
 *     # comment
 *     n=7
 *     1,2,5
 *     1,3,4
 *
 * The first non-comment line declares n; each later non-empty line is one
 * block of ascending 1-based elements. The JSON form is
 * {"n": 7, "blocks": [[1,2,5], [1,3,4]]}.
 */

/// Parses either format, detected by a leading '{'. Throws DomainError.
Family parse_family(std::string_view text);
Family read_family_file(const std::string& path);

void write_family_text(std::ostream& out, const Family& family);
std::string family_to_text(const Family& family);

nlohmann::ordered_json family_to_json(const Family& family);
Family family_from_json(const nlohmann::json& j);

} // namespace extri

#endif // EXTRI_FAMILY_IO_HPP
