#pragma once

// Runs the d2kit executable in a scratch directory.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "d2kit/io.hpp"

namespace cli {

class Scratch {
 public:
  explicit Scratch(const std::string& tag) {
    dir_ = std::filesystem::temp_directory_path() / ("d2kit_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() { std::filesystem::remove_all(dir_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    d2kit::write_text_file(path(name), content);
    return path(name);
  }

  // Runs `d2kit <args>` with stdout to `stdout_name`; returns the exit status.
  int run(const std::string& args, const std::string& stdout_name = "stdout.txt") const {
    const std::string command =
        std::string("'") + D2KIT_CLI + "' " + args + " > '" + path(stdout_name) + "' 2> '" + path("stderr.txt") + "'";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const { return d2kit::read_text_file(path(name)); }

 private:
  std::filesystem::path dir_;
};

inline std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace cli
