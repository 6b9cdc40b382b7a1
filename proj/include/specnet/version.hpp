#ifndef SPECNET_VERSION_HPP
#define SPECNET_VERSION_HPP

namespace specnet {

inline constexpr const char* kToolName = "specnet";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace specnet

#endif
