#pragma once

#define OBSTRUKT_VERSION "1.0.0"
