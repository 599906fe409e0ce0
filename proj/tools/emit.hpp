#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace pluri::cli {

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string formatDouble(double v);

/// RFC 4180 field quoting.
std::string csvField(const std::string& s);

/// Writes one CRLF-terminated record.
void csvRow(std::ostream& os, const std::vector<std::string>& fields);

/// Finite doubles become numbers, the rest null. Callers flag the null.
nlohmann::json jsonNumber(double v);

std::string sha256Hex(const std::string& data);

/// Writes `content` to `path`, throwing std::runtime_error with the OS message.
void writeFile(const std::string& path, const std::string& content);

}  // namespace pluri::cli
