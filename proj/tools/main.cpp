#include <cstdlib>
#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("sun_euler");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SUN_EULER_LOG")) spdlog::set_level(spdlog::level::from_str(level));

  const std::vector<std::string> args(argv + 1, argv + argc);
  const sun::cli::CommandResult result = sun::cli::run(args);
  spdlog::info("finished in {:.3f} ms with exit code {}", result.elapsed_ms, result.exit_code);
  sun::cli::emit(result, std::cout, std::cerr);
  return result.exit_code;
}
