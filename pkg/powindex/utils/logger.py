# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Logging utilities

"""

import logging
import os
import time

LOGFOLDERNAME = 'logs'
LOGDIR_ENVVAR = 'POWINDEX_LOGDIR'

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def get_log_folder():
    """
    Folder receiving the DEBUG log files. Defaults to LOGFOLDERNAME, can be
    moved with the POWINDEX_LOGDIR environment variable. An empty value
    disables the file stream.

    :return: a path, or None
    """
    folder = os.environ.get(LOGDIR_ENVVAR, LOGFOLDERNAME)
    return folder or None


def get_bistream_logger(name, level=logging.INFO):
    """
    Sets up a logger that outputs INFO+ messages on stdout and DEBUG+ messages
    in the log file

    :param name: a class __name__ attribute
    :param level: level of the console stream
    :return:
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        logger.setLevel(logging.DEBUG)
        formatter = logging.Formatter(FORMAT)

        folder = get_log_folder()
        if folder is not None:
            os.makedirs(folder, exist_ok=True)

            # create a file handler
            filename = name+get_timestr()+'.log'
            path = os.path.join(folder, filename)
            file_handler = logging.FileHandler(path)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        # create a stream handler
        stream_handler = logging.StreamHandler()
        stream_handler.setLevel(level)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)

        # the package root logger would print everything twice otherwise
        logger.propagate = False

    return logger


def set_console_level(logger, level):
    """
    Changes the level of the console stream(s) of a bistream logger, leaving
    the file stream at DEBUG

    :param logger:
    :param level: a logging level or its name
    :return:
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper())
    for handler in logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


def get_timestr():
    timestr = time.strftime("_%Y%m%d_%H%M%S")
    return timestr
