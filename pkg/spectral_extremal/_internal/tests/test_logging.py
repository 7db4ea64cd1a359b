import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

import unittest

from loguru import logger

import spectral_extremal._internal.logging as internal_logging


class TestInternalLog(unittest.TestCase):
    def tearDown(self):
        if internal_logging._handler_id is not None:
            logger.remove(internal_logging._handler_id)
            internal_logging._handler_id = None
        os.environ.pop("SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG", None)

    def test_log(self):
        os.environ["SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG"] = "1"
        internal_logging.enable()
        internal_logging.enable()
        msg = "oracle task 3 finished"
        internal_logging.log(msg)
        logger.info("not an internal record")
        with open(internal_logging._LOGFILE, "r") as f:
            text = f.read()
        self.assertEqual(text.count(msg), 1)
        self.assertNotIn("not an internal record", text)

    def test_needs_env(self):
        os.environ.pop("SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG", None)
        internal_logging.enable()
        self.assertIsNone(internal_logging._handler_id)
        internal_logging.log("dropped record")
        if os.path.exists(internal_logging._LOGFILE):
            with open(internal_logging._LOGFILE, "r") as f:
                self.assertNotIn("dropped record", f.read())


if __name__ == "__main__":
    unittest.main()
