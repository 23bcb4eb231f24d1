import threading

from django.conf import settings
from django.test import SimpleTestCase, override_settings
from django.test.runner import DiscoverRunner

from apps.default.exceptions import (
    AccionesError,
    ConvergenceError,
    CrossCheckError,
    InvalidInputError,
    UnsupportedError,
)
from apps.default.utils.config import get_setting
from apps.default.utils.rendering import render_pairs
from apps.default.utils.workers import run_parallel, worker_count


class ExceptionTests(SimpleTestCase):

    def test_codes(self):
        expected = {
            InvalidInputError: ('INVALID_INPUT', 400, 2),
            UnsupportedError: ('UNSUPPORTED', 422, 2),
            CrossCheckError: ('CROSS_CHECK_FAILED', 500, 3),
            ConvergenceError: ('NO_CONVERGENCE', 500, 3),
        }
        for cls, (code, http_status, exit_code) in expected.items():
            with self.subTest(error=cls.__name__):
                self.assertTrue(issubclass(cls, AccionesError))
                self.assertEqual((cls.code, cls.http_status, cls.exit_code), (code, http_status, exit_code))

    def test_response_data(self):
        error = InvalidInputError("q no es primo", q=6)
        self.assertEqual(error.as_response_data(), {'error': 'q no es primo', 'code': 'INVALID_INPUT'})
        self.assertEqual(error.details, {'q': 6})


class ConfigTests(SimpleTestCase):

    @override_settings(CLASSIFY={'MIN_Q': 11})
    def test_section_key(self):
        self.assertEqual(get_setting('CLASSIFY', 'MIN_Q', 7), 11)
        self.assertEqual(get_setting('CLASSIFY', 'MAX_Q', 23), 23)

    def test_missing(self):
        self.assertEqual(get_setting('NO_SUCH_SECTION', 'KEY', 'x'), 'x')
        self.assertEqual(get_setting('NO_SUCH_VALUE', default=5), 5)

    @override_settings(SA_THREADS=0)
    def test_at_least_one_worker(self):
        self.assertEqual(worker_count(), 1)


class WorkerTests(SimpleTestCase):

    @override_settings(SA_THREADS=4)
    def test_order_is_preserved(self):
        self.assertEqual(run_parallel(lambda n: n * n, range(50)), [n * n for n in range(50)])

    @override_settings(SA_THREADS=4)
    def test_uses_threads(self):
        seen = set()
        barrier = threading.Barrier(2, timeout=5)

        def task(_):
            seen.add(threading.get_ident())
            barrier.wait()

        run_parallel(task, range(2))
        self.assertEqual(len(seen), 2)

    def test_empty(self):
        self.assertEqual(run_parallel(str, []), [])


class ProjectTests(SimpleTestCase):

    def test_every_app_is_discovered(self):
        runner = DiscoverRunner(verbosity=0)
        for app in settings.CUSTOM_APPS:
            with self.subTest(app=app):
                self.assertGreater(runner.build_suite([app]).countTestCases(), 0)

    def test_apps_is_a_package(self):
        import apps
        self.assertIsNotNone(apps.__file__)

    def test_entry_points(self):
        from acciones_primas import asgi, wsgi
        self.assertTrue(callable(asgi.application))
        self.assertTrue(callable(wsgi.application))


class RenderingTests(SimpleTestCase):

    def test_pairs(self):
        lines = render_pairs({'q': 7, 'tags': ['X8', 'K']}, 'resumen').splitlines()
        self.assertEqual(lines[0], 'resumen')
        self.assertEqual(lines[-2:], ['q      7', 'tags   X8, K'])
