#ifndef MOLLOW_VERSION_HPP
#define MOLLOW_VERSION_HPP

namespace mollow {
inline constexpr const char* kVersion = "1.0.0";
}

#endif
