#ifndef A1GM_JSON_WRITER_HPP
#define A1GM_JSON_WRITER_HPP

#include <cstdint>
#include <string>
#include <vector>

// Minimal JSON emission helpers. Numbers are printed with 17 significant
// digits so doubles survive a parse/emit roundtrip bit-exactly; non-finite
// doubles become null.
namespace a1gm::jsonw {

std::string number(double v);
std::string number(std::uint64_t v); // covers std::size_t on LP64
std::string quote(const std::string& s);
std::string array(const std::vector<double>& v);
std::string array(const std::vector<std::uint64_t>& v);

} // namespace a1gm::jsonw

#endif
