"""This module defines commandline scripts."""