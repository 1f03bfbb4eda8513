from setuptools import find_namespace_packages, setup

import qseries.version


try:
    import fastentrypoints
except ImportError:
    pass


name = 'qseries'
version = qseries.version.VERSION


setup(
    name=name,
    version=version,
    description='Rigorous numerical and exact verification of bilateral basic hypergeometric identities',
    license='Apache 2.0',

    packages=find_namespace_packages(include=[name, f'{name}.*']),

    install_requires=[
        'jinja2>=3,<4',
        'jsonschema>=2.5,<5',
        'mpmath>=1.2,<2',
        'pyhocon>=0.3.50,<1',
    ],

    zip_safe=False,
    include_package_data=False,
    package_data={
        name: [
            'templates/*'
        ]
    },

    entry_points={
        'console_scripts': [
            'qseries=qseries.commands.main:execute'
        ],
    }
)
