import re
import codecs
import setuptools


def read_version():
    with codecs.open('remora/__version__.py', encoding='utf8') as f:
        return re.search(r"__version__ = '([^']+)'", f.read()).group(1)


install_requires = [
    'decorator',
    'kitchen',
    'six',
]

tests_require = [
    'pytest>=3.1.0',  # Pinned for the ``pytest.param`` method
    'coverage',
    'mock',
    'pylint',
]

extras_require = {
    'test': tests_require
}


def long_description():
    with codecs.open('README.md', encoding='utf8') as f:
        return f.read()


setuptools.setup(
    name='remora',
    version=read_version(),
    description='An interpreter and type checker for the Remora '
                'rank-polymorphic array language',
    long_description=long_description(),
    long_description_content_type='text/markdown',
    license='MIT',
    keywords='array language rank polymorphism interpreter apl j',
    packages=['remora'],
    package_data={'remora': ['templates/*']},
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require=extras_require,
    entry_points={'console_scripts': ['remora=remora.__main__:main']},
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Education',
        'Environment :: Console',
        'Operating System :: OS Independent',
        'Natural Language :: English',
        'Programming Language :: Python :: 2.7',
        'Programming Language :: Python :: 3',
        'Topic :: Software Development :: Interpreters',
        ],
)
