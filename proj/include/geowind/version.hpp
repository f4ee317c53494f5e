#ifndef GEOWIND_VERSION_HPP
#define GEOWIND_VERSION_HPP

namespace geowind {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace geowind

#endif  // GEOWIND_VERSION_HPP
