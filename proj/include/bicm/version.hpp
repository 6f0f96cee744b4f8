#ifndef BICM_VERSION_HPP
#define BICM_VERSION_HPP

namespace bicm {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
