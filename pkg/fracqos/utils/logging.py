# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Logging setup for the command line interface."""

import logging
import sys

CLI_LOGGER_NAME = "fracqos::cli"


def get_logger(level: int = logging.INFO) -> logging.Logger:
    """Get the command line logger.

    The root logger is only configured if nothing else configured it.

    Parameters
    ----------
    level : int, optional
        The logging level. Default is logging.INFO.

    Returns
    -------
    logging.Logger
        The logger.
    """
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=level,
            format="%(levelname)s %(message)s",
            stream=sys.stderr,
            force=True,
        )
    logger = logging.getLogger(CLI_LOGGER_NAME)
    if logger.getEffectiveLevel() != level:
        logger.setLevel(level)
    return logger
