#pragma once

#define FILMHOM_VERSION "0.1.0"
